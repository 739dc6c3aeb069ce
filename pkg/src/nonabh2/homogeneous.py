"""Homogeneous spaces: transitive right G-sets with a compatible Q-action.

The data is a form (a homomorphism Q -> Aut(G), written s(g)), a right
action x.g and a Q-action s(x) with s(x.g) = s(x).s(g). The stabilizer H
of a base point x0 carries a kernel and a class; the class is neutral
exactly when some twisted copy of G maps equivariantly onto X.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import extensions as X_
from . import kernels as K
from .errors import InvalidGSpace, NotCompatible, NotTransitive
from .groups import (FiniteGroup, compose, invert, is_automorphism, inner,
                     semidirect_product, subgroup)
from .limits import NodeBudget


@dataclass(frozen=True, eq=False)
class GSpace:
    G: FiniteGroup
    Q: FiniteGroup
    form: tuple          # form[s] is an automorphism of G
    gact: tuple          # gact[x][g] = x.g
    qact: tuple          # qact[s][x] = s(x)

    @property
    def size(self):
        return len(self.gact)

    @classmethod
    def make(cls, G, Q, form, gact, qact, check=True):
        S = cls(G, Q, tuple(tuple(int(v) for v in a) for a in form),
                tuple(tuple(int(v) for v in r) for r in gact),
                tuple(tuple(int(v) for v in r) for r in qact))
        if check:
            S.validate()
        return S

    def validate(self):
        G, Q, n = self.G, self.Q, self.size
        if len(self.form) != Q.order or len(self.qact) != Q.order:
            raise InvalidGSpace("form and Q-action need one entry per element of Q")
        for s, a in enumerate(self.form):
            if not is_automorphism(G, a):
                raise InvalidGSpace("form(%d) is not an automorphism" % s)
        for s in Q:
            for t in Q:
                if compose(self.form[s], self.form[t]) != self.form[Q.mt[s][t]]:
                    raise InvalidGSpace("form is not a homomorphism at %s" % ((s, t),))
        for x in range(n):
            row = self.gact[x]
            if len(row) != G.order or row[0] != x:
                raise InvalidGSpace("G-action row %d is malformed" % x)
            for g in G:
                for h in G.generators:
                    if self.gact[row[g]][h] != row[G.mt[g][h]]:
                        raise InvalidGSpace("not a right action at %s" % ((x, g, h),))
        for s in Q:
            if sorted(self.qact[s]) != list(range(n)):
                raise InvalidGSpace("Q acts by a non-bijection")
            for t in Q:
                st = Q.mt[s][t]
                if any(self.qact[s][self.qact[t][x]] != self.qact[st][x] for x in range(n)):
                    raise InvalidGSpace("Q-action fails at %s" % ((s, t),))
        if self.qact[0] != tuple(range(n)):
            raise InvalidGSpace("identity of Q acts nontrivially")
        if n == 0 or set(self.gact[0]) != set(range(n)):
            raise NotTransitive("G does not act transitively")
        for s in Q:
            for x in range(n):
                for g in G:
                    if self.qact[s][self.gact[x][g]] != self.gact[self.qact[s][x]][self.form[s][g]]:
                        raise NotCompatible("s(x.g) != s(x).s(g) at %s" % ((s, x, g),))
        return self

    def stabilizer(self, x0):
        return tuple(g for g in self.G if self.gact[x0][g] == x0)

    def transporters(self, x, y):
        """All g with x.g = y."""
        return [g for g in self.G if self.gact[x][g] == y]

    def is_torsor(self):
        return self.size == self.G.order and len(self.stabilizer(0)) == 1


@dataclass(frozen=True, eq=False)
class Torsor(GSpace):
    cocycle: tuple = ()     # c with s*y = c_s s(y)


def regular_space(G, Q, form):
    """G acting on itself by right translation, Q through the form."""
    gact = [list(G.mt[x]) for x in G]
    return GSpace.make(G, Q, form, gact, [list(a) for a in form])


def point_space(G, Q, form):
    return GSpace.make(G, Q, form, [[0] * G.order], [[0] for _ in Q])


def coset_space(G, Q, form, H):
    """Right cosets Hg with Q acting through the form; H must be stable under the form."""
    H = tuple(sorted(set(H)))
    cosets, cid = [], {}
    for g in G:
        if g not in cid:
            c = tuple(sorted(G.mt[h][g] for h in H))
            for y in c:
                cid[y] = len(cosets)
            cosets.append(c)
    gact = [[cid[G.mt[c[0]][g]] for g in G] for c in cosets]
    qact = [[cid[form[s][c[0]]] for c in cosets] for s in Q]
    return GSpace.make(G, Q, form, gact, qact)


def choose_a(S, x0, rng=None):
    """a_s with s(x0) = x0.a_s; a_1 = 1, least choice unless an rng is given."""
    a = []
    for s in S.Q:
        opts = S.transporters(x0, S.qact[s][x0])
        a.append(0 if s == 0 else (rng.choice(opts) if rng else opts[0]))
    return a


def stabilizer_data(S, x0=0, seed=None):
    """(kernel, cocycle, a, inclusion of H in G) for the base point x0."""
    rng = random.Random(seed) if seed is not None else None
    G, Q = S.G, S.Q
    Hel = S.stabilizer(x0)
    H, inc = subgroup(G, Hel, name="Stab")
    pos = {g: i for i, g in enumerate(inc.image)}
    a = choose_a(S, x0, rng)
    mt, inv = G.mt, G.inverse
    f = []
    for s in Q:
        f.append(tuple(pos[mt[mt[a[s]][S.form[s][h]]][inv[a[s]]]] for h in inc.image))
    g = [[pos[mt[mt[a[s]][S.form[s][a[t]]]][inv[a[Q.mt[s][t]]]]] for t in Q] for s in Q]
    L = K.validate_kernel(Q, H, f)
    c = K.TwoCocycle.make(f, g)
    verdict = K.is_cocycle(c, L)
    if not verdict:
        raise AssertionError("stabilizer cocycle fails: %s" % (verdict,))
    return L, c, tuple(a), inc.image


def stabilizer_kernel(S, x0=0, seed=None):
    return stabilizer_data(S, x0, seed)[0]


def class_alpha(S, x0=0):
    """E = {(g, s) in G x| Q : s(x0) = x0.g} as an extension of Q by Stab(x0)."""
    G, Q = S.G, S.Q
    SD = semidirect_product(G, Q, S.form, name="GxQ")
    n = G.order
    elems = [s * n + g for s in Q for g in G if S.gact[x0][g] == S.qact[s][x0]]
    E, einc = subgroup(SD, elems)
    epos = {e: i for i, e in enumerate(einc.image)}
    Hel = S.stabilizer(x0)
    H, _ = subgroup(G, Hel, name="Stab")
    return X_.Extension.make(E, H, Q, [epos[h] for h in Hel], [e // n for e in einc.image])


def one_cocycles(G, Q, form):
    """All c: Q -> G with c_1 = 1 and c_st = c_s s(c_t)."""
    mt = G.mt
    budget = NodeBudget("1-cocycle enumeration")
    out = []
    gens = Q.generators

    def close(c):
        changed = True
        while changed:
            changed = False
            for s in Q:
                if c[s] is None:
                    continue
                for t in Q:
                    if c[t] is None:
                        continue
                    st = Q.mt[s][t]
                    v = mt[c[s]][form[s][c[t]]]
                    if c[st] is None:
                        c[st] = v
                        changed = True
                    elif c[st] != v:
                        return False
        return True

    def rec(k, c):
        budget.tick()
        if k == len(gens):
            if None not in c:
                out.append(tuple(c))
            return
        for v in G:
            c2 = list(c)
            if c2[gens[k]] is not None:
                if c2[gens[k]] != v:
                    continue
            c2[gens[k]] = v
            if close(c2):
                rec(k + 1, c2)

    c0 = [None] * Q.order
    c0[0] = 0
    rec(0, c0)
    return sorted(set(out))


def twisted_torsor(G, Q, form, c):
    """G with right translation and s*y = c_s s(y)."""
    gact = tuple(tuple(G.mt[x]) for x in G)
    qact = tuple(tuple(G.mt[c[s]][form[s][y]] for y in G) for s in Q)
    T = Torsor(G, Q, tuple(form), gact, qact, tuple(c))
    T.validate()
    return T


def is_equivariant(T, S, phi):
    for y in range(T.size):
        for g in T.G:
            if phi[T.gact[y][g]] != S.gact[phi[y]][g]:
                return False
        for s in T.Q:
            if phi[T.qact[s][y]] != S.qact[s][phi[y]]:
                return False
    return True


def dominated_by_torsor(S):
    """(torsor, equivariant map T -> X) or None, by exhaustive search."""
    for c in one_cocycles(S.G, S.Q, S.form):
        T = twisted_torsor(S.G, S.Q, S.form, c)
        for y0 in range(S.size):
            phi = tuple(S.gact[y0][g] for g in S.G)
            if is_equivariant(T, S, phi):
                return T, phi
    return None


@dataclass
class Verification:
    neutral: bool
    dominated: bool
    splits: bool
    witness: object = None

    @property
    def agree(self):
        return self.neutral == self.dominated == self.splits


def verify_51(S, x0=0):
    """Neutrality of the stabilizer class against domination by a torsor."""
    L, c, _, _ = stabilizer_data(S, x0)
    neutral, _ = K.is_neutral(c, L)
    dom = dominated_by_torsor(S)
    splits = X_.find_splitting(class_alpha(S, x0)) is not None
    return Verification(neutral, dom is not None, splits, dom)


def transport_kernel(S, x0, x1):
    """Check that conjugation by a transporter g (x0.g = x1) carries kernel(x0) to kernel(x1)."""
    L0, _, _, inc0 = stabilizer_data(S, x0)
    L1, _, _, inc1 = stabilizer_data(S, x1)
    G = S.G
    g = S.transporters(x0, x1)[0]
    pos1 = {h: i for i, h in enumerate(inc1)}
    phi = tuple(pos1[G.prod(G.inverse[g], h, g)] for h in inc0)
    phinv = invert(phi)
    for s in S.Q:
        moved = compose(compose(phi, L0.kappa[s]), phinv)
        if compose(moved, invert(L1.kappa[s])) not in L1.inner:
            return False
    return True
