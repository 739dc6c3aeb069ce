"""Command-line front end.

Structured output (``--format structured``) is line-delimited JSON: a header
record ``{"format": "nonabh2-report", "version": 1, "command": ..., "seed": ...,
"limits": {...}}`` followed by one record per line, each with a ``"record"``
field naming its type. Keys are sorted, so identical inputs give identical
bytes. Exit codes: 0 success, 1 check failure, 2 input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import zlib
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import checks as CH
from . import cohomology as coh
from . import extensions as X_
from . import homogeneous as Hm
from . import io
from . import kernels as K
from . import limits
from . import local_global as LG
from .errors import GroupError, NotLocallySplit, SizeLimitExceeded
from .groups import (FiniteGroup, center, conjugacy_classes, inner_automorphisms,
                     involutions)

FORMAT_VERSION = 1
EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Reporter:
    def __init__(self, command, args):
        self.command = command
        self.fmt = args.format
        self.records = []
        self.header = {"format": "nonabh2-report", "version": FORMAT_VERSION,
                       "command": command, "seed": args.seed,
                       "limits": {"max_order": args.max_order, "max_nodes": args.max_nodes}}

    def emit(self, record, **fields):
        self.records.append(dict(fields, record=record))

    def render(self):
        if self.fmt == "structured":
            lines = [json.dumps(self.header, sort_keys=True)]
            lines += [json.dumps(r, sort_keys=True) for r in self.records]
            return "\n".join(lines) + "\n"
        lines = ["# %s (seed %s)" % (self.command, self.header["seed"])]
        for r in self.records:
            r = dict(r)
            kind = r.pop("record")
            body = ", ".join("%s=%s" % (k, _text(v)) for k, v in sorted(r.items()))
            lines.append("%s: %s" % (kind, body))
        return "\n".join(lines) + "\n"


def _text(v):
    if isinstance(v, (list, tuple)):
        return "[" + " ".join(_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + " ".join("%s=%s" % (k, _text(x)) for k, x in sorted(v.items())) + "}"
    return str(v).lower() if isinstance(v, bool) else str(v)


# ---------------------------------------------------------------- commands

def _load(path, kind):
    obj = io.load(path)
    expected = {"group": FiniteGroup, "kernel": K.Kernel, "gspace": Hm.GSpace,
                "module": coh.QModule, "complex": coh.ComplexTwoTerm}.get(kind)
    if expected is not None and not isinstance(obj, expected):
        raise io.InputError("%s: expected a %s description" % (path, kind))
    return obj


def cmd_group_info(args, rep):
    G = _load(args.file, "group")
    od = inner_automorphisms(G)
    inv = involutions(G)
    rep.emit("group", order=G.order, name=G.name, abelian=G.is_abelian,
             exponent=G.exponent, center=list(center(G)))
    rep.emit("automorphisms", aut=len(od.automorphisms), inn=od.inner_order, out=od.out_order)
    rep.emit("involutions", count=len(inv), elements=inv)
    rep.emit("conjugacy_classes", sizes=[len(c) for c in conjugacy_classes(G)],
             classes=[list(c) for c in conjugacy_classes(G)])
    return EXIT_OK


def _h2_records(L, rep):
    obs = K.obstruction(L)
    rep.emit("obstruction", zero=bool(obs.is_zero), h3_order=obs.h3.order,
             class_index=obs.class_index)
    h2 = K.enumerate_h2(L, obs)
    rep.emit("h2", size=len(h2), center_h2=h2.h2_center.order if h2.h2_center else None)
    for cls in h2:
        rep.emit("class", index=cls.index, neutral=cls.neutral,
                 f=[list(a) for a in cls.representative.f],
                 g=[list(r) for r in cls.representative.g])
    if not h2.empty:
        n = h2.h2_center.order
        rep.emit("action", table=[[h2.act(z, a) for a in range(len(h2))] for z in range(n)])
    return h2


def cmd_h2(args, rep):
    _h2_records(_load(args.file, "kernel"), rep)
    return EXIT_OK


def cmd_obstruction(args, rep):
    import random
    L = _load(args.file, "kernel")
    obs = K.obstruction(L)
    rng = random.Random(args.seed)
    same = []
    for _ in range(CH.SEED_TRIALS):
        s = rng.randrange(2 ** 31)
        same.append(K.obstruction(L, seed=s).same_class(obs))
    rep.emit("obstruction", zero=bool(obs.is_zero), h3_order=obs.h3.order,
             h3_invariants=list(obs.h3.invariants), class_index=obs.class_index,
             seeded_recomputations=len(same), independent_of_choices=all(same))
    return EXIT_OK if all(same) else EXIT_CHECK


def cmd_local_global(args, rep):
    L = _load(args.file, "kernel")
    h2 = K.enumerate_h2(L)
    r = LG.report(L, h2)
    rep.emit("orderings", count=len(r.space),
             representatives=list(r.space.representatives),
             classes=[list(c) for c in r.space.classes])
    for c in r.classes:
        for i, t, flag in c.local:
            rep.emit("local", h2_class=c.index, ordering=i, t=t, locally_neutral=flag)
        rep.emit("global", h2_class=c.index, neutral=c.globally_neutral,
                 locally_neutral_everywhere=c.locally_neutral_everywhere, verdict=c.verdict)
    try:
        ss = LG.sheaf_sections(L, h2)
        rep.emit("sections", local_sizes=list(ss.local_sizes), count=len(ss.sections),
                 hit=ss.hit_count,
                 hits=[{"section": list(k), "classes": v} for k, v in sorted(ss.hits.items())])
    except SizeLimitExceeded as exc:
        rep.emit("sections", skipped=str(exc))
    return EXIT_OK


def cmd_homogeneous(args, rep):
    S = _load(args.file, "gspace")
    L, c, a, inc = Hm.stabilizer_data(S, 0)
    rep.emit("stabilizer", elements=list(inc), order=L.G.order)
    rep.emit("kernel", kappa=[list(k) for k in L.kappa])
    rep.emit("class", f=[list(x) for x in c.f], g=[list(r) for r in c.g], a=list(a))
    v = Hm.verify_51(S)
    witness = None
    if v.witness is not None:
        T, phi = v.witness
        witness = {"torsor_cocycle": list(T.cocycle), "map": list(phi)}
    rep.emit("verify51", neutral=v.neutral, dominated=v.dominated, splits=v.splits,
             agree=v.agree, witness=witness)
    return EXIT_OK if v.agree else EXIT_CHECK


def cmd_cohomology(args, rep):
    m = _load(args.file, "module")
    H = coh.cohomology(m, args.degree, method=args.method)
    rep.emit("cohomology", degree=args.degree, method=args.method, order=H.order,
             invariants=list(H.invariants))
    return EXIT_OK


def cmd_hyper(args, rep):
    cx = _load(args.file, "complex")
    H = coh.hypercohomology(cx, args.degree, method=args.method)
    rep.emit("hypercohomology", degree=args.degree, order=H.order, invariants=list(H.invariants))
    les = coh.les_check(cx)
    rep.emit("les", exact=bool(les), checked=les.checked, first_failure=les.first_failure)
    return EXIT_OK if les else EXIT_CHECK


def _file_seed(seed, rel):
    return (seed * 1000003 + zlib.crc32(rel.encode())) % (2 ** 31)


def _kind_of(obj):
    if isinstance(obj, K.Kernel):
        return "kernel"
    if isinstance(obj, X_.Extension):
        return "extension"
    if isinstance(obj, Hm.GSpace):
        return "gspace"
    if isinstance(obj, coh.ComplexTwoTerm):
        return "complex"
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], K.Kernel):
        return "cocycle"
    return None


def _run_file(task):
    """Worker: run the selected checks on one corpus file; returns plain records."""
    path, rel, wanted, seed, lim = task
    out = []
    with limits.using(**lim):
        try:
            obj = io.load(path)
        except (io.InputError, GroupError) as exc:
            return [{"record": "error", "file": rel, "error": str(exc), "status": "input"}]
        kind = _kind_of(obj)
        if kind is None:
            return out
        for name, fn in sorted(CH.CHECKS[kind].items()):
            if wanted and name not in wanted:
                continue
            fseed = _file_seed(seed, rel + ":" + name)
            try:
                if kind == "cocycle":
                    ok, detail = fn(obj[0], obj[1], fseed)
                else:
                    ok, detail = fn(obj, fseed)
                out.append({"record": "check", "file": rel, "kind": kind, "check": name,
                            "ok": bool(ok), "detail": detail})
            except SizeLimitExceeded as exc:
                out.append({"record": "check", "file": rel, "kind": kind, "check": name,
                            "ok": False, "status": "size-limit", "detail": {"error": str(exc)}})
    return out


def cmd_corpus(args, rep):
    root = Path(args.dir)
    if not root.is_dir():
        raise io.InputError("%s: not a directory" % root)
    files = sorted(p for p in root.rglob("*.json"))
    wanted = set(args.checks.split(",")) if args.checks else set()
    unknown = wanted - set(CH.ALL_CHECKS)
    if unknown:
        raise io.InputError("unknown checks: %s" % ", ".join(sorted(unknown)))
    lim = {"max_order": args.max_order, "max_nodes": args.max_nodes}
    tasks = [(str(p), p.relative_to(root).as_posix(), wanted, args.seed, lim) for p in files]
    if args.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_run_file, tasks))
    else:
        results = [_run_file(t) for t in tasks]
    failed = errors = limited = 0
    total = 0
    for recs in results:
        for r in recs:
            rep.records.append(r)
            if r["record"] == "error":
                errors += 1
            elif r["record"] == "check":
                total += 1
                if r.get("status") == "size-limit":
                    limited += 1
                elif not r["ok"]:
                    failed += 1
    rep.emit("summary", files=len(files), checks=total, failed=failed, input_errors=errors,
             size_limited=limited, passed=total - failed - limited)
    if failed or errors:
        return EXIT_CHECK
    if limited:
        return EXIT_LIMIT
    return EXIT_OK


# ---------------------------------------------------------------- entry point

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    d = limits.Limits()
    common.add_argument("--max-order", type=int, default=d.max_order,
                        help="cap on group/class-list sizes (default %(default)s)")
    common.add_argument("--max-nodes", type=int, default=d.max_nodes,
                        help="cap on backtracking search nodes (default %(default)s)")
    common.add_argument("--workers", type=int, default=1, help="parallel workers for corpus runs")
    common.add_argument("--seed", type=int, default=0, help="seed for choice-independence checks")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="nonabh2", description="Finite non-abelian H^2 toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file_help=None):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file_help:
            sp.add_argument("file", help=file_help)
        sp.set_defaults(func=func)
        return sp

    add("group-info", cmd_group_info, "order, center, Aut/Inn/Out, involutions", "group file")
    add("h2", cmd_h2, "obstruction, H^2 classes, neutrality, torsor action", "kernel file")
    add("obstruction", cmd_obstruction, "obstruction class and choice independence", "kernel file")
    add("local-global", cmd_local_global, "orderings, local and global neutrality", "kernel file")
    add("homogeneous", cmd_homogeneous, "stabilizer kernel, class and torsor domination",
        "G-space file")
    sp = add("cohomology", cmd_cohomology, "H^n(Q, M)", "module file")
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--method", choices=("linear", "enumerate"), default="linear")
    sp = add("hyper", cmd_hyper, "hypercohomology of A -> B", "complex file")
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--method", choices=("linear", "enumerate"), default="linear")
    sp = add("corpus", cmd_corpus, "run invariant checks over a directory of fixtures")
    sp.add_argument("dir")
    sp.add_argument("--checks", default="",
                    help="comma-separated subset of: " + ", ".join(CH.ALL_CHECKS))
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_order <= 0 or args.max_nodes <= 0 or args.workers <= 0:
        parser.error("caps and worker count must be positive")
    rep = Reporter(args.command, args)
    try:
        with limits.using(max_order=args.max_order, max_nodes=args.max_nodes):
            code = args.func(args, rep)
    except SizeLimitExceeded as exc:
        rep.emit("abort", reason="size-limit", what=exc.what, size=exc.size, cap=exc.cap,
                 partial=True)
        code = EXIT_LIMIT
    except (io.InputError, GroupError, NotLocallySplit) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    text = rep.render()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code
