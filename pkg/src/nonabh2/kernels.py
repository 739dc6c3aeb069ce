"""Kernels L = (G, kappa), non-abelian 2-cocycles and the set H^2(Q, L).

A kernel is a homomorphism kappa: Q -> Out(G), given by one representative
automorphism per element of Q. A 2-cocycle is a pair (f, g) with

    f_s f_t = int(g_{s,t}) f_{st}
    f_s(g_{t,u}) g_{s,tu} = g_{s,t} g_{st,u}

and (f, g) ~ (f', g') when some h: Q -> G gives f'_s = int(h_s) f_s and
g'_{s,t} = h_s f_s(h_t) g_{s,t} h_{st}^-1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import cohomology as coh
from . import limits
from .errors import GroupError, NotOuterHomomorphism, SizeLimitExceeded
from .groups import (FiniteGroup, OuterClass, center, compose, identity_map, inner,
                     inner_automorphisms, inner_table, invert, is_automorphism,
                     iter_homomorphisms, subgroup)
from .limits import NodeBudget


@dataclass(frozen=True, eq=False)
class Kernel:
    Q: FiniteGroup
    G: FiniteGroup
    kappa: tuple

    @cached_property
    def inner(self):
        """int(x) -> least x"""
        return inner_table(self.G)

    @cached_property
    def center(self):
        return center(self.G)

    @cached_property
    def center_group(self):
        Z, inc = subgroup(self.G, self.center, name="Z(%s)" % (self.G.name or "G"))
        return Z, inc.image

    @cached_property
    def center_module(self):
        Z, emb = self.center_group
        pos = {x: i for i, x in enumerate(emb)}
        action = [tuple(pos[self.kappa[s][x]] for x in emb) for s in self.Q]
        return coh.QModule(self.Q, Z, action)

    def outer(self, s):
        return OuterClass(self.G, self.kappa[s])

    def is_inner(self, a):
        return a in self.inner

    def to_center(self, x):
        """Index in ``center_group`` of a central element x of G."""
        return self._center_pos[x]

    @cached_property
    def _center_pos(self):
        return {x: i for i, x in enumerate(self.center_group[1])}

    def __repr__(self):
        return "<Kernel Q=%r G=%r>" % (self.Q, self.G)


def validate_kernel(Q, G, kappa):
    """Check that ``kappa`` (one automorphism of G per element of Q) is a homomorphism to Out(G)."""
    kappa = tuple(tuple(int(v) for v in a) for a in kappa)
    if len(kappa) != Q.order:
        raise GroupError("kappa needs %d automorphisms, got %d" % (Q.order, len(kappa)))
    for s, a in enumerate(kappa):
        if not is_automorphism(G, a):
            raise GroupError("kappa(%d) is not an automorphism of G" % s)
    inn = inner_table(G)
    if kappa[0] not in inn:
        raise NotOuterHomomorphism((0, 0))
    inverses = [invert(a) for a in kappa]
    for s in Q:
        for t in Q:
            a = compose(compose(kappa[s], kappa[t]), inverses[Q.mt[s][t]])
            if a not in inn:
                raise NotOuterHomomorphism((s, t))
    return Kernel(Q, G, kappa)


def trivial_kernel(Q, G):
    return Kernel(Q, G, (identity_map(G),) * Q.order)


@dataclass(frozen=True)
class TwoCocycle:
    f: tuple
    g: tuple

    @classmethod
    def make(cls, f, g):
        return cls(tuple(tuple(int(v) for v in a) for a in f),
                   tuple(tuple(int(v) for v in row) for row in g))

    def key(self):
        return (self.f, self.g)

    def is_neutral_cocycle(self):
        return all(v == 0 for row in self.g for v in row)


@dataclass
class Verdict:
    ok: bool
    reason: str = ""
    where: tuple = ()

    def __bool__(self):
        return self.ok


def is_cocycle(c, L):
    """Check both cocycle identities and that f lifts kappa; report the first violation."""
    Q, G = L.Q, L.G
    n = Q.order
    if len(c.f) != n or len(c.g) != n or any(len(r) != n for r in c.g):
        return Verdict(False, "shape")
    for s in Q:
        if not is_automorphism(G, c.f[s]):
            return Verdict(False, "f(s) is not an automorphism", (s,))
        if compose(c.f[s], invert(L.kappa[s])) not in L.inner:
            return Verdict(False, "f(s) does not lift kappa(s)", (s,))
    mt = G.mt
    for s in Q:
        for t in Q:
            st = Q.mt[s][t]
            if compose(c.f[s], c.f[t]) != compose(inner(G, c.g[s][t]), c.f[st]):
                return Verdict(False, "f_s f_t != int(g_st) f_st", (s, t))
    for s in Q:
        fs = c.f[s]
        for t in Q:
            st = Q.mt[s][t]
            for u in Q:
                lhs = mt[fs[c.g[t][u]]][c.g[s][Q.mt[t][u]]]
                rhs = mt[c.g[s][t]][c.g[st][u]]
                if lhs != rhs:
                    return Verdict(False, "f_s(g_tu) g_s,tu != g_st g_st,u", (s, t, u))
    return Verdict(True)


def transform(c, h, L):
    """The cocycle equivalent to c through h."""
    G, Q = L.G, L.Q
    mt, inv = G.mt, G.inverse
    f = [compose(inner(G, h[s]), c.f[s]) for s in Q]
    g = [[mt[mt[mt[h[s]][c.f[s][h[t]]]][c.g[s][t]]][inv[h[Q.mt[s][t]]]] for t in Q] for s in Q]
    return TwoCocycle.make(f, g)


def normalize(c, L):
    """Equivalent cocycle with f_1 = id and g_{1,t} = g_{s,1} = 1."""
    g11 = c.g[0][0]
    if g11 == 0 and c.f[0] == identity_map(L.G):
        return c
    h = [0] * L.Q.order
    h[0] = L.G.inverse[g11]
    return transform(c, h, L)


def _solve_h(Q, cand, forced, budget):
    """Backtracking for h: Q -> G with h_{st} = forced(s, t, h_s, h_t) for all s, t."""
    n = Q.order
    sets = [set(c) for c in cand]
    mt = Q.mt

    def propagate(h, queue):
        while queue:
            s = queue.pop()
            for t in range(n):
                if h[t] is None:
                    continue
                for a, b in ((s, t), (t, s)):
                    ab = mt[a][b]
                    v = forced(a, b, h[a], h[b])
                    if h[ab] is None:
                        if v not in sets[ab]:
                            return False
                        h[ab] = v
                        queue.append(ab)
                    elif h[ab] != v:
                        return False
        return True

    def rec(h):
        budget.tick()
        if None not in h:
            return h
        s = h.index(None)
        for v in cand[s]:
            h2 = list(h)
            h2[s] = v
            if propagate(h2, [s]):
                out = rec(h2)
                if out is not None:
                    return out
        return None

    return rec([None] * n)


def cocycles_equivalent(c1, c2, L):
    """Witness h with c2 = h . c1, or None."""
    G, Q = L.G, L.Q
    mt, inv = G.mt, G.inverse
    cand = []
    for s in Q:
        x = L.inner.get(compose(c2.f[s], invert(c1.f[s])))
        if x is None:
            return None
        cand.append([mt[x][z] for z in L.center])

    def forced(s, t, hs, ht):
        st = Q.mt[s][t]
        return mt[mt[mt[inv[c2.g[s][t]]][hs]][c1.f[s][ht]]][c1.g[s][t]]

    h = _solve_h(Q, cand, forced, NodeBudget("equivalence search"))
    if h is None:
        return None
    h = tuple(h)
    if transform(c1, h, L) != c2:
        raise AssertionError("equivalence witness failed verification")
    return h


def find_neutral_equivalent(c, L):
    """h making h . c neutral (g == 1), or None."""
    G, Q = L.G, L.Q
    mt = G.mt
    cand = [list(G)] * Q.order

    def forced(s, t, hs, ht):
        return mt[mt[hs][c.f[s][ht]]][c.g[s][t]]

    h = _solve_h(Q, cand, forced, NodeBudget("neutrality search"))
    if h is None:
        return None
    h = tuple(h)
    if not transform(c, h, L).is_neutral_cocycle():
        raise AssertionError("neutrality witness failed verification")
    return h


def is_neutral(c, L):
    """(neutral?, witness h or None) for the class of c."""
    h = find_neutral_equivalent(c, L)
    return h is not None, h


def neutral_cocycle(L, f):
    """(f, 1) for a homomorphic lift f of kappa."""
    n = L.Q.order
    return TwoCocycle.make(f, [[0] * n for _ in range(n)])


def act(zeta, c, L):
    """z . (f, g) = (f, z g) for a 2-cocycle ``zeta`` on the center module."""
    Q = L.Q
    emb = L.center_group[1]
    mt = L.G.mt
    zeta = np.asarray(zeta)
    g = [[mt[emb[int(zeta[s, t])]][c.g[s][t]] for t in Q] for s in Q]
    return TwoCocycle(c.f, tuple(tuple(r) for r in g))


# ---------------------------------------------------------------- obstruction

@dataclass
class Obstruction:
    kernel: Kernel
    f: tuple
    g: tuple
    z: np.ndarray          # 3-cochain on the center module
    h3: coh.CohomologyGroup

    @cached_property
    def is_zero(self):
        return self.h3.is_coboundary(self.z)

    @cached_property
    def class_index(self):
        return self.h3.classify(self.z)

    def same_class(self, other):
        return self.h3.is_coboundary(coh.subtract(self.z, other.z, self.kernel.center_module))


def lift_kappa(L, rng=None):
    """A normalized set-theoretic lift f of kappa (random inner twists when rng is given)."""
    G = L.G
    f = [identity_map(G)]
    for s in range(1, L.Q.order):
        x = rng.randrange(G.order) if rng else 0
        f.append(compose(L.kappa[s], inner(G, x)))
    return tuple(f)


def obstruction(L, seed=None, h3=None):
    """obs(L) from a lift f and a g with f_s f_t = int(g_st) f_st."""
    rng = random.Random(seed) if seed is not None else None
    Q, G = L.Q, L.G
    mt, inv = G.mt, G.inverse
    f = lift_kappa(L, rng)
    Zel = L.center
    g = [[0] * Q.order for _ in Q]
    for s in range(1, Q.order):
        for t in range(1, Q.order):
            a = compose(compose(f[s], f[t]), invert(f[Q.mt[s][t]]))
            x = L.inner[a]
            if rng:
                x = mt[x][rng.choice(Zel)]
            g[s][t] = x
    module = L.center_module
    z = coh.zero_cochain(module, 3)
    for s in Q:
        for t in Q:
            st = Q.mt[s][t]
            for u in Q:
                lhs = mt[f[s][g[t][u]]][g[s][Q.mt[t][u]]]
                rhs = mt[g[s][t]][g[st][u]]
                val = mt[lhs][inv[rhs]]
                if val not in L._center_pos:
                    raise AssertionError("obstruction value is not central")
                z[s, t, u] = L.to_center(val)
    if coh.coboundary(z, module).any():
        raise AssertionError("obstruction cochain is not a 3-cocycle")
    if h3 is None:
        h3 = coh.cohomology(module, 3)
    return Obstruction(L, f, tuple(tuple(r) for r in g), z, h3)


# ---------------------------------------------------------------- H^2(Q, L)

@dataclass(eq=False)
class H2Class:
    kernel: Kernel
    representative: TwoCocycle
    index: int
    zeta_index: int

    @cached_property
    def neutral_witness(self):
        return find_neutral_equivalent(self.representative, self.kernel)

    @property
    def neutral(self):
        return self.neutral_witness is not None


@dataclass(eq=False)
class H2Set:
    """H^2(Q, L): classes zeta . base for zeta running over H^2(Q, Z(G))."""
    kernel: Kernel
    obstruction: Obstruction
    h2_center: coh.CohomologyGroup | None
    base: TwoCocycle | None
    classes: list = field(default_factory=list)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    @property
    def empty(self):
        return not self.classes

    def difference(self, c):
        """Index of the central class zeta with c ~ zeta . base."""
        L = self.kernel
        c = normalize(c, L)
        Q, G = L.Q, L.G
        h = []
        for s in Q:
            x = L.inner.get(compose(c.f[s], invert(self.base.f[s])))
            if x is None:
                raise ValueError("cocycle does not lift this kernel")
            h.append(x)
        moved = transform(self.base, h, L)
        mt, inv = G.mt, G.inverse
        z = coh.zero_cochain(L.center_module, 2)
        for s in Q:
            for t in Q:
                z[s, t] = L.to_center(mt[c.g[s][t]][inv[moved.g[s][t]]])
        return self.h2_center.classify(z)

    def index_of(self, c):
        zi = self.difference(c)
        return next(k.index for k in self.classes if k.zeta_index == zi)

    def act(self, zeta_index, class_index):
        zeta = self.h2_center.representatives[zeta_index]
        return self.index_of(act(zeta, self.classes[class_index].representative, self.kernel))

    def neutral_indices(self):
        return [k.index for k in self.classes if k.neutral]


def base_cocycle(L, obs=None):
    """A cocycle for L when obs(L) = 0, else None."""
    obs = obstruction(L) if obs is None else obs
    if not obs.is_zero:
        return None
    b = obs.h3.preimage(obs.z)
    module = L.center_module
    emb = L.center_group[1]
    mt = L.G.mt
    binv = coh.negate(b, module)
    g = [[mt[emb[int(binv[s, t])]][obs.g[s][t]] for t in L.Q] for s in L.Q]
    c = TwoCocycle.make(obs.f, g)
    verdict = is_cocycle(c, L)
    if not verdict:
        raise AssertionError("constructed cocycle fails: %s" % (verdict,))
    return c


def enumerate_h2(L, obs=None):
    """All classes of H^2(Q, L); empty exactly when the obstruction is nonzero."""
    obs = obstruction(L) if obs is None else obs
    if not obs.is_zero:
        return H2Set(L, obs, None, None, [])
    base = base_cocycle(L, obs)
    h2z = coh.cohomology(L.center_module, 2)
    classes = []
    for i, zeta in enumerate(h2z.representatives):
        rep = act(zeta, base, L)
        classes.append(H2Class(L, rep, i, i))
    return H2Set(L, obs, h2z, base, classes)


def dedupe_by_search(cocycles, L):
    """Partition cocycles into equivalence classes by explicit witness search."""
    reps = []
    labels = []
    for c in cocycles:
        for k, r in enumerate(reps):
            if cocycles_equivalent(r, c, L) is not None:
                labels.append(k)
                break
        else:
            labels.append(len(reps))
            reps.append(c)
    return reps, labels


def enumerate_cocycles_raw(L, max_count=None):
    """Every normalized 2-cocycle of L, by exhaustive search over lifts and corrections."""
    Q, G = L.Q, L.G
    n = Q.order
    mt = G.mt
    lifts = [[identity_map(G)]]
    for s in range(1, n):
        lifts.append(sorted({compose(inner(G, x), L.kappa[s]) for x in G}))
    nz = len(L.center)
    total = 1
    for l in lifts:
        total *= len(l)
    total *= nz ** ((n - 1) ** 2)
    cap = limits.current().max_enum_cochains if max_count is None else max_count
    if total > cap:
        raise SizeLimitExceeded("raw cocycle enumeration", total, cap)
    out = []
    pairs = [(s, t) for s in range(1, n) for t in range(1, n)]
    for f in itertools.product(*lifts):
        base = {}
        ok = True
        for s, t in pairs:
            x = L.inner.get(compose(compose(f[s], f[t]), invert(f[Q.mt[s][t]])))
            if x is None:
                ok = False
                break
            base[s, t] = x
        if not ok:
            continue
        for zs in itertools.product(L.center, repeat=len(pairs)):
            g = [[0] * n for _ in range(n)]
            for (s, t), z in zip(pairs, zs):
                g[s][t] = mt[base[s, t]][z]
            c = TwoCocycle.make(f, g)
            if is_cocycle(c, L):
                out.append(c)
    return out


def involutive_lifts(L, s):
    """Automorphisms of G in the outer class of kappa(s) that square to the identity."""
    G = L.G
    ident = identity_map(G)
    out = set()
    for x in G:
        a = compose(inner(G, x), L.kappa[s])
        if compose(a, a) == ident:
            out.add(a)
    return sorted(out)


def kernels_from_out(Q, G, outer=None):
    """Every kernel Q -> Out(G), kappa(s) the least automorphism in its outer class."""
    od = inner_automorphisms(G) if outer is None else outer
    for h in iter_homomorphisms(Q, od.out, what="outer action search"):
        yield Kernel(Q, G, tuple(od.automorphisms[od.out_representatives[h[s]]] for s in Q))
