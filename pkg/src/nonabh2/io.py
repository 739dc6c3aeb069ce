"""JSON description files for groups, kernels, cocycles, extensions, G-spaces and modules.

Every document is a JSON object. Groups are given as
``{"table": [[...]]}`` or ``{"permutations": {"degree": n, "generators": [...]}}``
(``"labels"`` and ``"name"`` optional), or ``{"named": "D5"}`` for the
built-in catalog. Wherever a group is expected, a string is read as a path
relative to the referring file. Other documents carry a ``"kind"`` field:

* ``kernel``: ``Q``, ``G``, ``kappa`` (one automorphism image table per element of Q)
* ``cocycle``: ``kernel`` (document or path), ``f``, ``g``
* ``extension``: ``E``, ``G``, ``Q``, ``iota``, ``pi``; or ``from_cocycle``
* ``gspace``: ``G``, ``Q``, ``form``, ``gact`` (``gact[x][g] = x.g``), ``qact``
* ``module``: ``Q``, ``M``, ``action``
* ``complex``: ``Q``, ``A``, ``B``, ``action_A``, ``action_B``, ``rho``
"""

from __future__ import annotations

import json
from pathlib import Path

from . import catalog
from . import cohomology as coh
from . import extensions as X_
from . import homogeneous as Hm
from . import kernels as K
from .errors import GroupError
from .groups import FiniteGroup, build_group, from_permutations


class InputError(ValueError):
    """Malformed or invalid input file."""


def _load_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("%s: %s" % (path, exc.strerror)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s:%d:%d: %s" % (path, exc.lineno, exc.colno, exc.msg)) from exc


def _need(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError("%s: missing field %r" % (where, key))
    return doc[key]


class Loader:
    """Resolves nested references and caches groups so shared files give one object."""

    def __init__(self):
        self._groups = {}

    def load(self, path):
        path = Path(path)
        return self.parse(_load_json(path), path.parent, str(path))

    def parse(self, doc, base=Path("."), where="<input>"):
        kind = doc.get("kind", "group") if isinstance(doc, dict) else None
        parser = {
            "group": self.group, "kernel": self.kernel, "cocycle": self.cocycle,
            "extension": self.extension, "gspace": self.gspace,
            "module": self.module, "complex": self.complex,
        }.get(kind)
        if parser is None:
            raise InputError("%s: unknown kind %r" % (where, kind))
        try:
            return parser(doc, base, where)
        except (GroupError, KeyError, TypeError, IndexError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError("%s: %s" % (where, exc)) from exc

    def _ref(self, ref, base, where, expect):
        if isinstance(ref, str):
            path = (base / ref).resolve()
            if expect == "group" and path in self._groups:
                return self._groups[path]
            doc = _load_json(path)
            obj = self.parse(doc, path.parent, str(path))
            if expect == "group":
                self._groups[path] = obj
            return obj
        return self.parse(dict(ref, kind=ref.get("kind", expect)), base, where)

    def group(self, doc, base, where):
        if "named" in doc:
            name = doc["named"]
            if name not in catalog.NAMED:
                raise InputError("%s: unknown named group %r" % (where, name))
            return catalog.NAMED[name]()
        if "table" in doc:
            return build_group(doc["table"], doc.get("labels"), doc.get("name", ""))
        if "permutations" in doc:
            p = doc["permutations"]
            G, _ = from_permutations(_need(p, "degree", where), _need(p, "generators", where),
                                     doc.get("labels"), doc.get("name", ""))
            return G
        raise InputError("%s: group needs 'table', 'permutations' or 'named'" % where)

    def kernel(self, doc, base, where):
        Q = self._ref(_need(doc, "Q", where), base, where, "group")
        G = self._ref(_need(doc, "G", where), base, where, "group")
        return K.validate_kernel(Q, G, _need(doc, "kappa", where))

    def cocycle(self, doc, base, where):
        L = self._ref(_need(doc, "kernel", where), base, where, "kernel")
        c = K.TwoCocycle.make(_need(doc, "f", where), _need(doc, "g", where))
        return L, c

    def extension(self, doc, base, where):
        if "from_cocycle" in doc:
            L, c = self._ref(doc["from_cocycle"], base, where, "cocycle")
            verdict = K.is_cocycle(c, L)
            if not verdict:
                raise InputError("%s: not a cocycle (%s at %s)" % (where, verdict.reason, verdict.where))
            return X_.cocycle_to_extension(c, L)
        E = self._ref(_need(doc, "E", where), base, where, "group")
        G = self._ref(_need(doc, "G", where), base, where, "group")
        Q = self._ref(_need(doc, "Q", where), base, where, "group")
        return X_.Extension.make(E, G, Q, _need(doc, "iota", where), _need(doc, "pi", where))

    def gspace(self, doc, base, where):
        G = self._ref(_need(doc, "G", where), base, where, "group")
        Q = self._ref(_need(doc, "Q", where), base, where, "group")
        return Hm.GSpace.make(G, Q, _need(doc, "form", where), _need(doc, "gact", where),
                              _need(doc, "qact", where))

    def module(self, doc, base, where):
        Q = self._ref(_need(doc, "Q", where), base, where, "group")
        M = self._ref(_need(doc, "M", where), base, where, "group")
        action = doc.get("action") or [list(range(M.order))] * Q.order
        return coh.QModule(Q, M, [tuple(a) for a in action])

    def complex(self, doc, base, where):
        Q = self._ref(_need(doc, "Q", where), base, where, "group")
        A = self._ref(_need(doc, "A", where), base, where, "group")
        B = self._ref(_need(doc, "B", where), base, where, "group")
        actA = doc.get("action_A") or [list(range(A.order))] * Q.order
        actB = doc.get("action_B") or [list(range(B.order))] * Q.order
        mA = coh.QModule(Q, A, [tuple(a) for a in actA])
        mB = coh.QModule(Q, B, [tuple(a) for a in actB])
        return coh.ComplexTwoTerm(mA, mB, tuple(_need(doc, "rho", where)))


def load(path):
    return Loader().load(path)


# ---------------------------------------------------------------- writers

def group_doc(G: FiniteGroup):
    doc = {"kind": "group", "table": [list(r) for r in G.mt]}
    if G.name:
        doc["name"] = G.name
    if G.labels:
        doc["labels"] = list(G.labels)
    return doc


def kernel_doc(L):
    return {"kind": "kernel", "Q": group_doc(L.Q), "G": group_doc(L.G),
            "kappa": [list(a) for a in L.kappa]}


def cocycle_doc(L, c):
    return {"kind": "cocycle", "kernel": kernel_doc(L),
            "f": [list(a) for a in c.f], "g": [list(r) for r in c.g]}


def extension_doc(X):
    return {"kind": "extension", "E": group_doc(X.E), "G": group_doc(X.G), "Q": group_doc(X.Q),
            "iota": list(X.iota), "pi": list(X.pi)}


def gspace_doc(S):
    return {"kind": "gspace", "G": group_doc(S.G), "Q": group_doc(S.Q),
            "form": [list(a) for a in S.form], "gact": [list(r) for r in S.gact],
            "qact": [list(r) for r in S.qact]}


def module_doc(m):
    return {"kind": "module", "Q": group_doc(m.Q), "M": group_doc(m.M),
            "action": [list(a) for a in m.action]}


def complex_doc(cx):
    return {"kind": "complex", "Q": group_doc(cx.A.Q), "A": group_doc(cx.A.M),
            "B": group_doc(cx.B.M), "action_A": [list(a) for a in cx.A.action],
            "action_B": [list(a) for a in cx.B.action], "rho": list(cx.rho)}


def dump(doc, path):
    Path(path).write_text(json.dumps(doc, separators=(",", ":")) + "\n", encoding="utf-8")
