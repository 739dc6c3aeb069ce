"""Invariant checks run by the ``corpus`` command, one function per (kind, check).

Each check returns ``(ok, detail)`` where ``detail`` is a JSON-ready dict.
Detail values never depend on timing or scheduling.
"""

from __future__ import annotations

import random

from . import cohomology as coh
from . import extensions as X_
from . import homogeneous as Hm
from . import kernels as K
from . import local_global as LG
from .errors import SizeLimitExceeded

SEED_TRIALS = 5


# ---------------------------------------------------------------- kernels

def kernel_obstruction(L, seed):
    """Nonempty H^2 iff zero obstruction, with the class stable under seeded lift choices."""
    obs = K.obstruction(L)
    h2 = K.enumerate_h2(L, obs)
    rng = random.Random(seed)
    stable = all(K.obstruction(L, seed=rng.randrange(2 ** 31)).same_class(obs)
                 for _ in range(SEED_TRIALS))
    detail = {"obstruction_zero": bool(obs.is_zero), "h2_size": len(h2),
              "seed_stable": stable}
    ok = stable and (obs.is_zero == (len(h2) > 0))
    try:
        raw = K.enumerate_cocycles_raw(L)
    except SizeLimitExceeded:
        detail["raw_oracle"] = "skipped"
    else:
        reps, _ = K.dedupe_by_search(raw, L)
        detail["raw_oracle"] = len(reps)
        ok = ok and len(reps) == len(h2)
    return ok, detail


def kernel_torsor(L, seed=None):
    """|H^2(Q,L)| = |H^2(Q,Z)|; free and transitive; fibre products agree with act."""
    h2 = K.enumerate_h2(L)
    if h2.empty:
        return True, {"h2_size": 0, "vacuous": True}
    n = len(h2)
    ok = n == h2.h2_center.order
    for i in range(n):
        for j in range(i + 1, n):
            if K.cocycles_equivalent(h2[i].representative, h2[j].representative, L) is not None:
                ok = False
    reps = h2.h2_center.representatives
    table = [[h2.act(z, a) for a in range(n)] for z in range(len(reps))]
    free = all(table[z][a] != a for z in range(1, len(reps)) for a in range(n))
    transitive = all(sorted(table[z][a] for z in range(len(reps))) == list(range(n))
                     for a in range(n))
    fibre_ok = True
    exts = [X_.cocycle_to_extension(c.representative, L) for c in h2]
    for z, zeta in enumerate(reps):
        B = X_.center_extension(L, zeta)
        for a in range(n):
            R = X_.fiber_product_action(B, exts[a], L)
            idx = h2.index_of(X_.extension_to_cocycle(R))
            moved = K.act(zeta, h2[a].representative, L)
            witness = K.cocycles_equivalent(moved, h2[idx].representative, L)
            if idx != table[z][a] or witness is None:
                fibre_ok = False
    ok = ok and free and transitive and fibre_ok
    return ok, {"h2_size": n, "center_h2_size": h2.h2_center.order, "free": free,
                "transitive": transitive, "fibre_product_agrees": fibre_ok}


def kernel_roundtrip(L, seed=None):
    """cocycle -> extension -> cocycle and back, with verified witnesses."""
    h2 = K.enumerate_h2(L)
    ok = True
    for cls in h2:
        c = cls.representative
        E = X_.cocycle_to_extension(c, L)
        c2 = X_.extension_to_cocycle(E)
        if K.cocycles_equivalent(c, c2, L) is None:
            ok = False
        E2 = X_.cocycle_to_extension(c2, L)
        if X_.extensions_equivalent(E, E2) is None:
            ok = False
    return ok, {"classes": len(h2)}


def kernel_neutral_split(L, seed=None):
    h2 = K.enumerate_h2(L)
    flags = []
    ok = True
    for cls in h2:
        splits = X_.find_splitting(X_.cocycle_to_extension(cls.representative, L)) is not None
        flags.append(cls.neutral)
        ok = ok and splits == cls.neutral
    return ok, {"neutral": flags}


def kernel_local(L, seed=None):
    h2 = K.enumerate_h2(L)
    ok = True
    for cls in h2:
        good, _ = extension_local(X_.cocycle_to_extension(cls.representative, L))
        ok = ok and good
    return ok, {"classes": len(h2), "orderings": len(LG.orderings(L.Q))}


def kernel_abelian(L, seed=None):
    """For abelian G: class count and neutrality match ordinary H^2 of the module G."""
    if not L.G.is_abelian:
        return True, {"applicable": False}
    module = coh.QModule(L.Q, L.G, L.kappa)
    lin = coh.cohomology(module, 2)
    h2 = K.enumerate_h2(L)
    ok = len(h2) == lin.order
    detail = {"applicable": True, "h2_size": len(h2), "abelian_h2": lin.order}
    try:
        en = coh.cohomology(module, 2, method="enumerate")
    except SizeLimitExceeded:
        detail["enumeration"] = "skipped"
    else:
        detail["enumeration"] = en.order
        ok = ok and en.order == lin.order
    seen = set()
    for cls in h2:
        c = cls.representative
        g = coh.zero_cochain(module, 2)
        for s in L.Q:
            for t in L.Q:
                g[s, t] = c.g[s][t]
        k = lin.classify(g)
        seen.add(k)
        ok = ok and (cls.neutral == (k == 0))
    ok = ok and len(seen) == len(h2)
    return ok, detail


# ---------------------------------------------------------------- extensions

def extension_local(X, seed=None):
    """Local verdicts agree on conjugate involutions; split implies locally neutral."""
    space = LG.orderings(X.Q)
    ok = True
    verdicts = []
    for cls in space.classes:
        flags = {LG.localize(X, t).neutral for t in cls}
        ok = ok and len(flags) == 1
        flag = flags.pop()
        verdicts.append(flag)
        local_split = X_.find_splitting(X_.restrict(X, (0, cls[0]))) is not None
        ok = ok and local_split == flag
    if X_.find_splitting(X) is not None:
        ok = ok and all(verdicts)
    return ok, {"local": verdicts}


def extension_strategies(X, seed=None):
    brute = X_.find_splitting(X, "brute")
    red = X_.find_splitting(X, "reduce")
    ok = (brute is None) == (red is None)
    sets_equal = [s.section for s in X_.all_splittings(X, "brute")] == \
        [s.section for s in X_.all_splittings(X, "reduce")]
    return ok and sets_equal, {"splits": brute is not None, "same_splitting_sets": sets_equal}


def extension_roundtrip(X, seed=None):
    L = X.kernel
    c = X_.extension_to_cocycle(X)
    ok = bool(K.is_cocycle(c, L))
    E2 = X_.cocycle_to_extension(c, L)
    ok = ok and X_.extensions_equivalent(X, E2) is not None
    c2 = X_.extension_to_cocycle(E2)
    ok = ok and K.cocycles_equivalent(c, c2, L) is not None
    return ok, {}


def extension_neutral_split(X, seed=None):
    L = X.kernel
    neutral, _ = K.is_neutral(X_.extension_to_cocycle(X), L)
    splits = X_.find_splitting(X) is not None
    return neutral == splits, {"neutral": neutral, "splits": splits}


# ---------------------------------------------------------------- other kinds

def gspace_verify51(S, seed=None):
    v = Hm.verify_51(S)
    return v.agree, {"neutral": v.neutral, "dominated": v.dominated, "splits": v.splits}


def gspace_choices(S, seed):
    """Kernel independent of x0 and class independent of the a_s choices."""
    ok = all(Hm.transport_kernel(S, 0, x) for x in range(S.size))
    L, c, _, _ = Hm.stabilizer_data(S, 0)
    rng = random.Random(seed)
    for _ in range(3):
        _, c2, _, _ = Hm.stabilizer_data(S, 0, seed=rng.randrange(2 ** 31))
        ok = ok and bool(K.is_cocycle(c2, L)) and K.cocycles_equivalent(c, c2, L) is not None
    return ok, {}


def cocycle_valid(L, c, seed=None):
    v = K.is_cocycle(c, L)
    return bool(v), ({} if v else {"reason": v.reason, "where": list(v.where)})


def complex_hyper(cx, seed=None):
    """Degenerate complexes on A and B, and exactness of the long sequence."""
    ok = True
    detail = {}
    for name, m in (("A", cx.A), ("B", cx.B)):
        for i in range(3):
            hb = coh.hypercohomology(coh.ComplexTwoTerm.zero_to(m), i).invariants
            ha = coh.hypercohomology(coh.ComplexTwoTerm.to_zero(m), i).invariants
            hi = coh.hypercohomology(coh.ComplexTwoTerm.identity(m), i).order
            ok = ok and hb == coh.cohomology(m, i).invariants
            ok = ok and ha == coh.cohomology(m, i + 1).invariants
            ok = ok and hi == 1
    les = coh.les_check(cx)
    ok = ok and bool(les)
    detail["les_exact"] = bool(les)
    detail["hyper_orders"] = [coh.hypercohomology(cx, i).order for i in range(3)]
    return ok, detail


CHECKS = {
    "kernel": {"obstruction": kernel_obstruction, "torsor": kernel_torsor,
               "roundtrip": kernel_roundtrip, "neutral_split": kernel_neutral_split,
               "local": kernel_local, "abelian": kernel_abelian},
    "extension": {"local": extension_local, "strategies": extension_strategies,
                  "roundtrip": extension_roundtrip, "neutral_split": extension_neutral_split},
    "gspace": {"verify51": gspace_verify51, "choices": gspace_choices},
    "cocycle": {"cocycle": cocycle_valid},
    "complex": {"hyper": complex_hyper},
}

ALL_CHECKS = sorted({name for table in CHECKS.values() for name in table})
