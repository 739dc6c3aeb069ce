"""Finite groups stored as dense multiplication tables.

Elements are the integers ``0..order-1`` and ``0`` is always the identity.
Automorphisms are plain image tuples ``a`` with ``a[x]`` the image of ``x``;
composition is right-to-left, ``compose(a, b)[x] == a[b[x]]``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from . import limits
from .errors import (NoIdentity, NoInverse, NotAssociative, NotHomomorphism,
                     NotNormal, GroupError, SizeLimitExceeded)

Automorphism = tuple


class FiniteGroup:
    """Validated finite group; build with :func:`build_group` or :mod:`nonabh2.catalog`."""

    def __init__(self, table, inverse, labels=None, name=""):
        t = np.array(table, dtype=np.int64)
        t.setflags(write=False)
        self.table = t
        self.mt = t.tolist()
        self.inverse = tuple(int(i) for i in inverse)
        self.labels = tuple(str(x) for x in labels) if labels is not None else None
        self.name = name

    @property
    def order(self):
        return len(self.mt)

    def __len__(self):
        return len(self.mt)

    def __iter__(self):
        return iter(range(len(self.mt)))

    def __repr__(self):
        name = self.name or "FiniteGroup"
        return "<%s of order %d>" % (name, self.order)

    def mul(self, a, b):
        return self.mt[a][b]

    def inv(self, a):
        return self.inverse[a]

    def prod(self, *xs):
        return reduce(lambda a, b: self.mt[a][b], xs, 0)

    def conj(self, x, y):
        """x y x^-1"""
        return self.mt[self.mt[x][y]][self.inverse[x]]

    def commutator(self, x, y):
        return self.prod(x, y, self.inverse[x], self.inverse[y])

    def power(self, x, k):
        if k < 0:
            x, k = self.inverse[x], -k
        r = 0
        while k:
            if k & 1:
                r = self.mt[r][x]
            x = self.mt[x][x]
            k >>= 1
        return r

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    @cached_property
    def element_orders(self):
        out = []
        for x in self:
            k, y = 1, x
            while y != 0:
                y = self.mt[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def exponent(self):
        return int(np.lcm.reduce(np.array(self.element_orders)))

    def order_census(self):
        """Multiset of element orders as a sorted tuple of (order, count)."""
        counts = {}
        for k in self.element_orders:
            counts[k] = counts.get(k, 0) + 1
        return tuple(sorted(counts.items()))

    def generate(self, gens):
        """Sorted tuple of the subgroup generated by ``gens``."""
        seen = {0}
        frontier = [0]
        gens = [g for g in gens if g != 0]
        while frontier:
            nxt = []
            for x in frontier:
                row = self.mt[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def generators(self):
        """Small generating set chosen greedily, highest element order first."""
        gens = []
        span = {0}
        for x in sorted(self, key=lambda x: (-self.element_orders[x], x)):
            if len(span) == self.order:
                break
            if x not in span:
                gens.append(x)
                span = set(self.generate(gens))
        return tuple(gens)

    @cached_property
    def cayley_tree(self):
        """BFS tree over right multiplication by ``generators``: list of (x, parent, gen_pos)."""
        seen = {0}
        order = [(0, -1, -1)]
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(self.generators):
                y = self.mt[x][g]
                if y not in seen:
                    seen.add(y)
                    order.append((y, x, k))
                    queue.append(y)
        return tuple(order)

    def is_subgroup(self, elems):
        s = set(elems)
        if 0 not in s:
            return False
        return all(self.mt[a][self.inverse[b]] in s for a in s for b in s)

    def is_normal(self, elems):
        return normality_witness(self, elems) is None

    def normal_closure(self, elems):
        gens = set(elems)
        while True:
            sub = self.generate(gens)
            conj = {self.conj(g, n) for g in self for n in sub}
            if conj <= set(sub):
                return sub
            gens = conj | set(sub)

    def centralizer(self, x):
        return tuple(y for y in self if self.mt[x][y] == self.mt[y][x])


def normality_witness(G, elems):
    s = set(elems)
    for g in G.generators or (0,):
        for n in s:
            if G.conj(g, n) not in s:
                return (g, n)
    return None


def _identity_index(t):
    n = len(t)
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def _relabel(t, perm):
    """Table of the same group after renaming old element ``perm[i]`` to ``i``."""
    perm = np.asarray(perm)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return inv[t[np.ix_(perm, perm)]]


def _magma_generators(t):
    n = len(t)
    mt = t.tolist()
    gens, closure = [], set()
    for x in range(n):
        if x in closure:
            continue
        gens.append(x)
        closure = set(gens)
        frontier = list(gens)
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = mt[y][g]
                    if z not in closure:
                        closure.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(closure) == n:
            break
    return gens


def check_associative(t):
    """Light's test over a magma generating set; raises NotAssociative."""
    t = np.asarray(t)
    for s in _magma_generators(t):
        left = t[t[:, s], :]          # (x s) y
        right = t[:, t[s, :]]         # x (s y)
        bad = np.argwhere(left != right)
        if len(bad):
            x, y = (int(v) for v in bad[0])
            raise NotAssociative((x, s, y))


def build_group(table, labels=None, name="", check=True):
    """Validate a square multiplication table and return a FiniteGroup.

    If the identity is not element 0 the elements are renamed by swapping it
    into position 0 (labels follow).
    """
    t = np.array(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise GroupError("table must be a non-empty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries must lie in 0..%d" % (n - 1))
    if labels is not None and len(labels) != n:
        raise GroupError("expected %d labels, got %d" % (n, len(labels)))
    e = _identity_index(t)
    if e is None:
        raise NoIdentity()
    if e != 0:
        perm = list(range(n))
        perm[0], perm[e] = perm[e], perm[0]
        t = _relabel(t, perm)
        if labels is not None:
            labels = [labels[i] for i in perm]
    inverse = []
    for x in range(n):
        ys = np.flatnonzero(t[x] == 0)
        y = next((int(y) for y in ys if t[y, x] == 0), None)
        if y is None:
            raise NoInverse(x)
        inverse.append(y)
    if check:
        check_associative(t)
    return FiniteGroup(t, inverse, labels, name)


def from_permutations(degree, generators, labels=None, name=""):
    """Group generated by permutations of ``range(degree)``.

    Products compose left to right: ``(p*q)[i] == q[p[i]]``. Elements are
    listed in breadth-first order from the identity.
    """
    ident = tuple(range(degree))
    gens = [tuple(int(v) for v in g) for g in generators]
    for g in gens:
        if sorted(g) != list(ident):
            raise GroupError("generator %s is not a permutation of degree %d" % (g, degree))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[p[i]] for i in range(degree))
            if q not in index:
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
                if len(elems) > limits.current().max_order:
                    raise SizeLimitExceeded("permutation closure", len(elems),
                                            limits.current().max_order)
    n = len(elems)
    table = [[index[tuple(q[p[i]] for i in range(degree))] for q in elems] for p in elems]
    if labels is None:
        labels = [str(list(p)) for p in elems]
    inverse = [0] * n
    for p, i in index.items():
        pinv = [0] * degree
        for a, b in enumerate(p):
            pinv[b] = a
        inverse[i] = index[tuple(pinv)]
    return FiniteGroup(table, inverse, labels, name), elems


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple

    def __call__(self, x):
        return self.image[x]

    def check(self):
        s, t, im = self.source, self.target, self.image
        if len(im) != s.order:
            raise GroupError("image table has wrong length")
        for x in s:
            for y in s.generators:
                if im[s.mt[x][y]] != t.mt[im[x]][im[y]]:
                    raise NotHomomorphism((x, y))
        if s.order and im[0] != 0:
            raise NotHomomorphism((0, 0))
        return self

    def kernel(self):
        return tuple(x for x in self.source if self.image[x] == 0)

    def is_injective(self):
        return len(set(self.image)) == self.source.order

    def is_surjective(self):
        return len(set(self.image)) == self.target.order

    def then(self, other):
        """The composite ``other o self``."""
        return GroupMap(self.source, other.target, tuple(other.image[x] for x in self.image))


def identity_map(G):
    return tuple(range(G.order))


def compose(a, b):
    """a o b"""
    return tuple(a[x] for x in b)


def invert(a):
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def inner(G, x):
    """int(x): y -> x y x^-1"""
    xi = G.inverse[x]
    mt = G.mt
    return tuple(mt[mt[x][y]][xi] for y in G)


def is_automorphism(G, a):
    if len(a) != G.order or sorted(a) != list(range(G.order)):
        return False
    mt = G.mt
    return all(a[mt[x][y]] == mt[a[x]][a[y]] for x in G for y in G.generators)


def inner_table(G):
    """Map int(x) -> least x realizing it."""
    out = {}
    for x in G:
        out.setdefault(inner(G, x), x)
    return out


def center(G):
    t = G.table
    return tuple(int(x) for x in np.flatnonzero((t == t.T).all(axis=1)))


def involutions(G):
    return tuple(h for h in G if h != 0 and G.mt[h][h] == 0)


def conjugacy_classes(G):
    seen = set()
    classes = []
    for x in G:
        if x in seen:
            continue
        cls = sorted({G.conj(g, x) for g in G})
        seen.update(cls)
        classes.append(tuple(cls))
    return classes


def derived_subgroup(G):
    return G.generate({G.commutator(x, y) for x in G for y in G})


def minimal_normal_subgroups(G):
    closures = {G.normal_closure([x]) for x in G if x != 0}
    return sorted((N for N in closures if not any(M < set(N) for M in map(set, closures))),
                  key=lambda N: (len(N), N))


def socle(G):
    gens = set()
    for N in minimal_normal_subgroups(G):
        gens.update(N)
    return G.generate(gens)


def characteristic_subgroups(G):
    """Proper nontrivial members of (center, derived subgroup, socle), in that order, deduplicated."""
    out = []
    for H in (center(G), derived_subgroup(G), socle(G)):
        if 1 < len(H) < G.order and H not in out:
            out.append(H)
    return out


def subgroup(G, elems, name=""):
    """Subgroup ``elems`` as its own FiniteGroup plus the inclusion map."""
    elems = tuple(sorted(set(elems)))
    if not elems or elems[0] != 0 or not G.is_subgroup(elems):
        raise GroupError("elements do not form a subgroup")
    pos = {x: i for i, x in enumerate(elems)}
    mt = G.mt
    table = [[pos[mt[a][b]] for b in elems] for a in elems]
    inverse = [pos[G.inverse[a]] for a in elems]
    labels = [G.label(a) for a in elems] if G.labels else None
    H = FiniteGroup(table, inverse, labels, name)
    return H, GroupMap(H, G, elems)


def quotient(G, N, name=""):
    """G/N with projection; cosets are ordered by least member."""
    N = tuple(sorted(set(N)))
    if not G.is_subgroup(N):
        raise GroupError("N is not a subgroup")
    w = normality_witness(G, N)
    if w is not None:
        raise NotNormal(w)
    cid = [-1] * G.order
    reps = []
    for x in G:
        if cid[x] < 0:
            for n in N:
                cid[G.mt[x][n]] = len(reps)
            reps.append(x)
    table = [[cid[G.mt[a][b]] for b in reps] for a in reps]
    inverse = [cid[G.inverse[a]] for a in reps]
    Q = FiniteGroup(table, inverse, None, name)
    return Q, GroupMap(G, Q, tuple(cid))


def _hom_candidates(G, H, gens, bijective):
    orders_h = H.element_orders
    cands = []
    for g in gens:
        k = G.element_orders[g]
        if bijective:
            cands.append([y for y in H if orders_h[y] == k])
        else:
            cands.append([y for y in H if k % orders_h[y] == 0])
    return cands


def iter_homomorphisms(G, H, bijective=False, what="homomorphism search"):
    """Yield every homomorphism G -> H (as image tuples) by searching generator images."""
    gens = G.generators
    cands = _hom_candidates(G, H, gens, bijective)
    total = 1
    for c in cands:
        total *= len(c)
    cap = limits.current().max_aut_candidates
    if total > cap:
        raise SizeLimitExceeded(what, total, cap)
    tree = G.cayley_tree
    n = G.order
    gmt, hmt = G.mt, H.mt
    for choice in itertools.product(*cands):
        img = [0] * n
        for x, parent, k in tree[1:]:
            img[x] = hmt[img[parent]][choice[k]]
        if bijective and len(set(img)) != n:
            continue
        ok = True
        for x in range(n):
            row = gmt[x]
            ix = hmt[img[x]]
            for k, g in enumerate(gens):
                if img[row[g]] != ix[choice[k]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(img)


def find_isomorphism(G, H):
    if G.order != H.order or G.order_census() != H.order_census():
        return None
    return next(iter_homomorphisms(G, H, bijective=True, what="isomorphism search"), None)


def automorphism_group(G):
    """Aut(G) as a FiniteGroup whose element i is ``auts[i]``; identity first."""
    auts = sorted(iter_homomorphisms(G, G, bijective=True, what="automorphism search"))
    if len(auts) > limits.current().max_order:
        raise SizeLimitExceeded("automorphism group table", len(auts), limits.current().max_order)
    index = {a: i for i, a in enumerate(auts)}
    table = [[index[compose(a, b)] for b in auts] for a in auts]
    inverse = [index[invert(a)] for a in auts]
    return FiniteGroup(table, inverse, None, "Aut(%s)" % (G.name or "G")), auts


@dataclass(frozen=True, eq=False)
class OuterData:
    aut: FiniteGroup
    automorphisms: list
    inner_indices: tuple
    out: FiniteGroup
    out_projection: GroupMap
    out_representatives: tuple

    @property
    def inner_order(self):
        return len(self.inner_indices)

    @property
    def out_order(self):
        return self.out.order


def inner_automorphisms(G, aut=None):
    """Int(G) inside Aut(G), and Out(G) = Aut(G)/Int(G) with coset representatives."""
    A, auts = aut if aut is not None else automorphism_group(G)
    index = {a: i for i, a in enumerate(auts)}
    inn = tuple(sorted({index[inner(G, x)] for x in G}))
    out, proj = quotient(A, inn, name="Out")
    reps = []
    for i in A:
        if proj.image[i] == len(reps):
            reps.append(i)
    return OuterData(A, auts, inn, out, proj, tuple(reps))


@dataclass(frozen=True, eq=False)
class OuterClass:
    """An element of Out(G), held as a representative automorphism."""
    parent: FiniteGroup
    representative: tuple

    def __eq__(self, other):
        if not isinstance(other, OuterClass) or other.parent is not self.parent:
            return NotImplemented
        return same_outer_class(self.parent, self.representative, other.representative)

    def __hash__(self):
        return hash(min(compose(inner(self.parent, x), self.representative) for x in self.parent))


def same_outer_class(G, a, b, inn=None):
    inn = inner_table(G) if inn is None else inn
    return compose(a, invert(b)) in inn


def direct_product(G, H, name=""):
    """G x H with (g, h) at index h*|G| + g."""
    n, m = G.order, H.order
    idx = lambda g, h: h * n + g
    table = [[idx(G.mt[g1][g2], H.mt[h1][h2]) for h2 in H for g2 in G] for h1 in H for g1 in G]
    inverse = [idx(G.inverse[g], H.inverse[h]) for h in H for g in G]
    labels = ["(%s,%s)" % (G.label(g), H.label(h)) for h in H for g in G]
    return FiniteGroup(table, inverse, labels, name or "%sx%s" % (G.name, H.name))


def semidirect_product(N, H, action, name=""):
    """N x| H with (n, h)(n', h') = (n action[h](n'), h h'); (n, h) sits at h*|N| + n."""
    n = N.order
    idx = lambda a, b: b * n + a
    nmt, hmt = N.mt, H.mt
    table = [[idx(nmt[a1][action[b1][a2]], hmt[b1][b2]) for b2 in H for a2 in N]
             for b1 in H for a1 in N]
    inverse = []
    for b in H:
        bi = H.inverse[b]
        for a in N:
            inverse.append(idx(action[bi][N.inverse[a]], bi))
    labels = ["(%s,%s)" % (N.label(a), H.label(b)) for b in H for a in N]
    return FiniteGroup(table, inverse, labels, name)
