"""Concrete extensions 1 -> G -> E -> Q -> 1, their cocycles, and splittings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels as K
from .errors import InvalidExtension, NoCharacteristicSubgroup
from .groups import (FiniteGroup, GroupMap, build_group, characteristic_subgroups,
                     direct_product, involutions, quotient, subgroup)
from .limits import NodeBudget


@dataclass(frozen=True, eq=False)
class Extension:
    E: FiniteGroup
    G: FiniteGroup
    Q: FiniteGroup
    iota: tuple
    pi: tuple

    @classmethod
    def make(cls, E, G, Q, iota, pi, check=True):
        X = cls(E, G, Q, tuple(int(v) for v in iota), tuple(int(v) for v in pi))
        if check:
            X.validate()
        return X

    def validate(self):
        E, G, Q = self.E, self.G, self.Q
        try:
            GroupMap(G, E, self.iota).check()
            GroupMap(E, Q, self.pi).check()
        except Exception as exc:
            raise InvalidExtension(str(exc)) from exc
        if len(set(self.iota)) != G.order:
            raise InvalidExtension("iota is not injective")
        if len(set(self.pi)) != Q.order:
            raise InvalidExtension("pi is not surjective")
        if sorted(self.iota) != [e for e in E if self.pi[e] == 0]:
            raise InvalidExtension("image of iota differs from kernel of pi")
        return self

    @cached_property
    def iota_inv(self):
        return {e: x for x, e in enumerate(self.iota)}

    @cached_property
    def fibers(self):
        out = [[] for _ in self.Q]
        for e in self.E:
            out[self.pi[e]].append(e)
        return out

    @cached_property
    def canonical_section(self):
        """Least preimage of each s, with the identity sent to the identity."""
        sec = [f[0] for f in self.fibers]
        sec[0] = 0
        return tuple(sec)

    @cached_property
    def kernel(self):
        return induced_kernel(self)

    def involutions_over(self, t):
        return [e for e in self.fibers[t] if e != 0 and self.E.mt[e][e] == 0]

    def involution_census(self):
        """(number of involutions of E, number lying in iota(G))."""
        inv = involutions(self.E)
        inside = sum(1 for e in inv if self.pi[e] == 0)
        return len(inv), inside


@dataclass(frozen=True)
class Splitting:
    section: tuple

    def verify(self, X):
        Q, mt = X.Q, X.E.mt
        sec = self.section
        if sec[0] != 0:
            return False
        for s in Q:
            if X.pi[sec[s]] != s:
                return False
            for t in Q:
                if mt[sec[s]][sec[t]] != sec[Q.mt[s][t]]:
                    return False
        return True


# ---------------------------------------------------------------- dictionary

def cocycle_to_extension(c, L, name=""):
    """E = G x Q with (x, s)(y, t) = (x f_s(y) g_{s,t}, st); (x, s) sits at s|G| + x."""
    G, Q = L.G, L.Q
    n, q = G.order, Q.order
    gm = G.mt
    f = np.array(c.f, dtype=np.int64)
    g = np.array(c.g, dtype=np.int64)
    GT = np.array(G.table)
    x = np.arange(n)
    table = np.empty((n * q, n * q), dtype=np.int64)
    for s in range(q):
        for t in range(q):
            st = Q.mt[s][t]
            xf = GT[x[:, None], f[s][x][None, :]]
            val = GT[xf, g[s, t]]
            table[s * n:(s + 1) * n, t * n:(t + 1) * n] = st * n + val
    e = G.inverse[c.g[0][0]]
    E0 = build_group(table, name=name)
    # build_group swaps the identity (index e) into position 0
    perm = list(range(n * q))
    perm[0], perm[e] = perm[e], perm[0]
    iota = [perm[gm[y][e]] for y in G]
    pi = [perm[i] // n for i in range(n * q)]
    return Extension.make(E0, G, Q, iota, pi)


def _section_data(X, section):
    sec = X.canonical_section if section is None else tuple(section)
    E = X.E
    f = []
    for s in X.Q:
        z = sec[s]
        f.append(tuple(X.iota_inv[E.conj(z, X.iota[y])] for y in X.G))
    return sec, f


def extension_to_cocycle(X, section=None):
    """f_s = conjugation by z_s on G, g_{s,t} = z_s z_t z_st^-1, with z the section."""
    sec, f = _section_data(X, section)
    E, Q = X.E, X.Q
    g = [[X.iota_inv[E.prod(sec[s], sec[t], E.inverse[sec[Q.mt[s][t]]])] for t in Q] for s in Q]
    return K.TwoCocycle.make(f, g)


def induced_kernel(X):
    _, f = _section_data(X, None)
    return K.validate_kernel(X.Q, X.G, f)


def _extend_hom(A, B, gens, imgs):
    """The homomorphism A -> B sending gens[i] to imgs[i], or None if there is none."""
    img = [None] * A.order
    img[0] = 0
    order = [0]
    amt, bmt = A.mt, B.mt
    for x in order:
        for g, h in zip(gens, imgs):
            y = amt[x][g]
            v = bmt[img[x]][h]
            if img[y] is None:
                img[y] = v
                order.append(y)
            elif img[y] != v:
                return None
    if len(order) != A.order:
        return None
    return tuple(img)


def extensions_equivalent(X1, X2):
    """Isomorphism E1 -> E2 compatible with iota and pi, or None."""
    if X1.E.order != X2.E.order or X1.G.order != X2.G.order:
        return None
    Q = X1.Q
    qgens = Q.generators
    gens = [X1.iota[x] for x in X1.G.generators] + [X1.canonical_section[s] for s in qgens]
    fixed = [X2.iota[x] for x in X1.G.generators]
    budget = NodeBudget("extension equivalence search")
    for choice in itertools.product(*[X2.fibers[s] for s in qgens]):
        budget.tick()
        phi = _extend_hom(X1.E, X2.E, gens, fixed + list(choice))
        if phi is None or len(set(phi)) != X1.E.order:
            continue
        if all(phi[X1.iota[x]] == X2.iota[x] for x in X1.G) and \
                all(X2.pi[phi[e]] == X1.pi[e] for e in X1.E):
            return phi
    return None


# ---------------------------------------------------------------- splittings

def _closure(E, gens):
    seen = {0}
    frontier = [0]
    mt = E.mt
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mt[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _brute_splittings(X):
    """Complements of iota(G) by backtracking over fibre choices for generators of Q."""
    Q, E = X.Q, X.E
    gens = Q.generators
    budget = NodeBudget("splitting search")

    def rec(k, chosen):
        budget.tick()
        H = _closure(E, chosen)
        if any(X.pi[h] == 0 and h != 0 for h in H):
            return
        if k == len(gens):
            sec = [None] * Q.order
            for h in H:
                sec[X.pi[h]] = h
            if None not in sec:
                yield Splitting(tuple(sec))
            return
        for e in X.fibers[gens[k]]:
            yield from rec(k + 1, chosen + [e])

    yield from rec(0, [])


def _reduce_splittings(X, depth=0):
    chars = characteristic_subgroups(X.G)
    if not chars:
        yield from _brute_splittings(X)
        return
    N = chars[0]
    iN = [X.iota[x] for x in N]
    Ebar, proj = quotient(X.E, iN)
    Gbar, gproj = quotient(X.G, N)
    iota_bar = [None] * Gbar.order
    for x in X.G:
        iota_bar[gproj.image[x]] = proj.image[X.iota[x]]
    pi_bar = [None] * Ebar.order
    for e in X.E:
        pi_bar[proj.image[e]] = X.pi[e]
    Xbar = Extension.make(Ebar, Gbar, X.Q, iota_bar, pi_bar)
    NG, ninc = subgroup(X.G, N)
    for sbar in _reduce_splittings(Xbar, depth + 1):
        image = set(sbar.section)
        S_elems = [e for e in X.E if proj.image[e] in image]
        S, sinc = subgroup(X.E, S_elems)
        pos = {e: i for i, e in enumerate(sinc.image)}
        XS = Extension.make(S, NG, X.Q, [pos[X.iota[x]] for x in ninc.image],
                            [X.pi[e] for e in sinc.image])
        for sp in _reduce_splittings(XS, depth + 1):
            yield Splitting(tuple(sinc.image[e] for e in sp.section))


def all_splittings(X, strategy="brute"):
    """Every homomorphic section of pi, sorted."""
    gen = _brute_splittings(X) if strategy == "brute" else _reduce_splittings(X)
    return sorted(gen, key=lambda s: s.section)


def find_splitting(X, strategy="brute"):
    """A verified homomorphic section, or None.

    ``reduce`` splits E/iota(N) for a characteristic subgroup N of G and then
    the preimage of each section; it is complete because every splitting of E
    descends to one of E/iota(N). Without such an N it falls back to ``brute``.
    """
    if strategy not in ("brute", "reduce"):
        raise ValueError("unknown strategy %r" % strategy)
    gen = _brute_splittings(X) if strategy == "brute" else _reduce_splittings(X)
    sp = next(iter(gen), None)
    if sp is not None and not sp.verify(X):
        raise AssertionError("splitting failed verification")
    return sp


def reduction_subgroup(X):
    """The characteristic subgroup the reduce strategy would use first."""
    chars = characteristic_subgroups(X.G)
    if not chars:
        raise NoCharacteristicSubgroup("G has no proper nontrivial characteristic subgroup")
    return chars[0]


# ---------------------------------------------------------------- torsor action

def center_kernel(L):
    """The abelian kernel (Z(G), action induced by kappa)."""
    Zg, emb = L.center_group
    pos = {x: i for i, x in enumerate(emb)}
    action = [tuple(pos[L.kappa[s][x]] for x in emb) for s in L.Q]
    return K.Kernel(L.Q, Zg, tuple(action))


def center_extension(L, zeta):
    """Extension of Q by Z(G) with cocycle (kappa-action, zeta)."""
    LZ = center_kernel(L)
    zeta = np.asarray(zeta)
    c = K.TwoCocycle.make(LZ.kappa, [[int(zeta[s, t]) for t in L.Q] for s in L.Q])
    return cocycle_to_extension(c, LZ)


def fiber_product_action(B, X, L):
    """(B x_Q E)/D with D = {(iota_B(z), iota_X(z)^-1)}; G enters as x -> (1, iota_X(x))D."""
    emb = L.center_group[1]
    Eb, Ex = B.E, X.E
    nb = Eb.order
    P_elems = [ex * nb + eb for ex in Ex for eb in Eb if B.pi[eb] == X.pi[ex]]
    BE = direct_product(Eb, Ex)
    D = [X.iota[X.G.inverse[emb[z]]] * nb + B.iota[z] for z in range(len(emb))]
    P, pinc = subgroup(BE, P_elems)
    pos = {e: i for i, e in enumerate(pinc.image)}
    R, proj = quotient(P, [pos[d] for d in D])
    iota = [proj.image[pos[X.iota[x] * nb]] for x in X.G]
    pi = [None] * R.order
    for i, e in enumerate(pinc.image):
        pi[proj.image[i]] = X.pi[e // nb]
    return Extension.make(R, X.G, X.Q, iota, pi)


def restrict(X, S):
    """pi^-1(S) as an extension of S by G."""
    S = tuple(sorted(set(S)))
    Sg, sinc = subgroup(X.Q, S)
    spos = {s: i for i, s in enumerate(sinc.image)}
    pre = [e for e in X.E if X.pi[e] in spos]
    E2, einc = subgroup(X.E, pre)
    epos = {e: i for i, e in enumerate(einc.image)}
    return Extension.make(E2, X.G, Sg, [epos[X.iota[x]] for x in X.G],
                          [spos[X.pi[e]] for e in einc.image])


def semidirect_extension(L, f):
    """G x| Q for a homomorphic lift f of kappa."""
    return cocycle_to_extension(K.neutral_cocycle(L, f), L)


def extension_from_normal(E, N, name_g="", name_q=""):
    """1 -> N -> E -> E/N -> 1 for a normal subgroup N of E."""
    G, inc = subgroup(E, N, name=name_g)
    Q, proj = quotient(E, inc.image, name=name_q)
    return Extension.make(E, G, Q, inc.image, proj.image)
