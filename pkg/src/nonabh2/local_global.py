"""Finite model of orderings: involution classes of Q, local neutrality, Inv-sections.

An ordering is a conjugacy class of involutions t of Q; the local group is
<t> of order 2, and a class is locally neutral at t when some e in E over t
is an involution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import extensions as X_
from . import kernels as K
from .errors import NotLocallySplit, SizeLimitExceeded
from . import limits
from .groups import conjugacy_classes, involutions, subgroup


@dataclass(frozen=True)
class OrderingSpace:
    Q: object
    classes: tuple          # tuples of involutions, ordered by least member

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)

    def __len__(self):
        return len(self.classes)

    def class_of(self, t):
        for i, c in enumerate(self.classes):
            if t in c:
                return i
        raise KeyError(t)


def orderings(Q):
    inv = set(involutions(Q))
    return OrderingSpace(Q, tuple(c for c in conjugacy_classes(Q) if c[0] in inv))


@dataclass
class LocalStatus:
    t: int
    neutral: bool
    lifts: list
    restricted: X_.Extension


def localize(X, t):
    """Local status at the involution t (any member of an ordering class)."""
    R = X_.restrict(X, (0, t))
    return LocalStatus(t, bool(X.involutions_over(t)), X.involutions_over(t), R)


def g_conjugate(X, a, b):
    """Some iota(g) with iota(g) a iota(g)^-1 = b, or None."""
    E = X.E
    for x in X.iota:
        if E.conj(x, a) == b:
            return x
    return None


@dataclass
class InvSection:
    tau: dict               # involution of Q -> involution of E
    transversal: dict       # involution t -> least s with s t0 s^-1 = t


def _class_ok(X, t0, sigma):
    """Every y over the centralizer of t0 conjugates sigma into its iota(G)-class."""
    Q, E = X.Q, X.E
    for s in Q.centralizer(t0):
        for y in X.fibers[s]:
            if g_conjugate(X, sigma, E.conj(y, sigma)) is None:
                return False
    return True


def inv_section(X):
    """An Inv-section tau, or None when no choice of lifts is conjugation-compatible.

    Each class is seeded with a lift of its least member and spread by
    conjugating along the least transporting element of Q. Raises
    NotLocallySplit if some involution of Q has no involution over it.
    """
    Q, E = X.Q, X.E
    space = orderings(Q)
    rho = X.canonical_section
    tau, trans = {}, {}
    for cls in space.classes:
        t0 = cls[0]
        lifts = X.involutions_over(t0)
        if not lifts:
            raise NotLocallySplit(t0)
        sigma = next((e for e in lifts if _class_ok(X, t0, e)), None)
        if sigma is None:
            return None
        for t in cls:
            s = next(s for s in Q if Q.conj(s, t0) == t)
            trans[t] = s
            tau[t] = E.conj(rho[s], sigma)
    section = InvSection(tau, trans)
    if not check_inv_section(X, section):
        raise AssertionError("Inv-section failed its compatibility check")
    return section


def check_inv_section(X, section):
    Q, E = X.Q, X.E
    for t, e in section.tau.items():
        if X.pi[e] != t or E.mt[e][e] != 0 or e == 0:
            return False
    for t in section.tau:
        for x in E:
            t2 = Q.conj(X.pi[x], t)
            if g_conjugate(X, E.conj(x, section.tau[t]), section.tau[t2]) is None:
                return False
    return True


def compatible_splitting(X, section):
    """A splitting sigma with sigma(t) iota(G)-conjugate to tau(t) for every involution t."""
    for sp in X_.all_splittings(X):
        if all(g_conjugate(X, sp.section[t], e) is not None for t, e in section.tau.items()):
            return sp
    return None


@dataclass
class ClassReport:
    index: int
    local: list             # (ordering index, representative t, locally neutral)
    globally_neutral: bool
    cocycle_neutral: bool

    @property
    def locally_neutral_everywhere(self):
        return all(flag for _, _, flag in self.local)

    @property
    def verdict(self):
        """Whether 'locally neutral at every ordering implies neutral' held here."""
        return self.globally_neutral or not self.locally_neutral_everywhere


@dataclass
class LocalReport:
    kernel: K.Kernel
    space: OrderingSpace
    obstruction_zero: bool
    classes: list = field(default_factory=list)

    @property
    def verdict(self):
        return all(c.verdict for c in self.classes)


def report(L, h2=None):
    h2 = K.enumerate_h2(L) if h2 is None else h2
    space = orderings(L.Q)
    out = LocalReport(L, space, h2.obstruction.is_zero)
    for cls in h2:
        X = X_.cocycle_to_extension(cls.representative, L)
        local = [(i, t, localize(X, t).neutral) for i, t in enumerate(space.representatives)]
        glob = X_.find_splitting(X) is not None
        out.classes.append(ClassReport(cls.index, local, glob, cls.neutral))
    return out


def restrict_kernel(L, S):
    """Kernel of the subgroup S of Q (S given by its sorted elements)."""
    Sg, inc = subgroup(L.Q, S)
    return K.Kernel(Sg, L.G, tuple(L.kappa[s] for s in inc.image)), inc.image


def restrict_cocycle(c, inc):
    return K.TwoCocycle.make([c.f[s] for s in inc], [[c.g[s][t] for t in inc] for s in inc])


@dataclass
class SheafSections:
    space: OrderingSpace
    local_sizes: tuple
    sections: list           # assignments, one local class index per ordering
    hits: dict               # assignment -> list of global class indices

    @property
    def hit_count(self):
        return len(self.hits)


def sheaf_sections(L, h2=None):
    """Assignments of a local class to each ordering, with those hit by global classes."""
    h2 = K.enumerate_h2(L) if h2 is None else h2
    space = orderings(L.Q)
    local = []
    for t in space.representatives:
        Lt, inc = restrict_kernel(L, (0, t))
        local.append((K.enumerate_h2(Lt), Lt, inc))
    sizes = tuple(len(h) for h, _, _ in local)
    total = 1
    for n in sizes:
        total *= n
    cap = limits.current().max_enum_cochains
    if total > cap:
        raise SizeLimitExceeded("sheaf section enumeration", total, cap)
    sections = list(itertools.product(*[range(n) for n in sizes]))
    hits = {}
    for cls in h2:
        key = tuple(hl.index_of(restrict_cocycle(cls.representative, inc)) for hl, _, inc in local)
        hits.setdefault(key, []).append(cls.index)
    return SheafSections(space, sizes, sections, hits)
