"""Small named groups used by fixtures, tests and the CLI."""

from __future__ import annotations

import itertools
from functools import reduce

from .groups import FiniteGroup, direct_product, from_permutations, build_group


def trivial():
    return FiniteGroup([[0]], [0], ["1"], "1")


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, [(-i) % n for i in range(n)], [str(i) for i in range(n)], "Z%d" % n)


def abelian(*invariants):
    if not invariants:
        return trivial()
    return reduce(direct_product, [cyclic(n) for n in invariants])


def klein():
    G = abelian(2, 2)
    G.name = "V4"
    return G


def dihedral(n):
    """Symmetries of the n-gon, order 2n; r^i s^j sits at index j*n + i."""
    def idx(i, j):
        return j * n + i % n

    table = []
    for j in range(2):
        for i in range(n):
            row = []
            for l in range(2):
                for k in range(n):
                    row.append(idx(i + (k if j == 0 else -k), (j + l) % 2))
            table.append(row)
    inverse = [idx(-i, 0) for i in range(n)] + [idx(i, 1) for i in range(n)]
    labels = ["r%d" % i for i in range(n)] + ["r%ds" % i for i in range(n)]
    return FiniteGroup(table, inverse, labels, "D%d" % n)


def dicyclic(n):
    """Order 4n: a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1; a^i x^j at index j*2n + i."""
    m = 2 * n

    def mul(u, v):
        i, j = u % m, u // m
        k, l = v % m, v // m
        e = i + (k if j == 0 else -k)
        if j + l == 2:
            e += n
        return ((j + l) % 2) * m + e % m

    N = 2 * m
    table = [[mul(u, v) for v in range(N)] for u in range(N)]
    inverse = [next(v for v in range(N) if table[u][v] == 0) for u in range(N)]
    labels = ["a%d" % i for i in range(m)] + ["a%dx" % i for i in range(m)]
    return FiniteGroup(table, inverse, labels, "Q8" if n == 2 else "Dic%d" % n)


def quaternion():
    return dicyclic(2)


def symmetric(n):
    gens = [tuple([1, 0] + list(range(2, n)))] if n > 1 else []
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    G, _ = from_permutations(n, gens, name="S%d" % n)
    return G


def alternating(n):
    gens = [tuple([1, 2, 0] + list(range(3, n)))] if n > 2 else []
    if n > 3:
        gens.append(tuple([0] + list(range(2, n)) + [1]) if n % 2 == 0
                    else tuple(list(range(1, n)) + [0]))
    G, _ = from_permutations(n, gens, name="A%d" % n)
    return G


def affine(p):
    """Transformations X -> aX + b over F_p under composition (f*g = f o g).

    The a-values are ordered 1, -1, 2, 3, ... so the elements with a = +-1
    occupy indices ``0..2p-1``.
    """
    avals = [1, p - 1] + [a for a in range(2, p - 1)] if p > 2 else [1]
    apos = {a: i for i, a in enumerate(avals)}
    elems = [(a, b) for a in avals for b in range(p)]
    pos = {e: i for i, e in enumerate(elems)}

    def comp(f, g):
        (a1, b1), (a2, b2) = f, g
        return (a1 * a2 % p, (a1 * b2 + b1) % p)

    table = [[pos[comp(f, g)] for g in elems] for f in elems]
    inverse = [next(j for j, g in enumerate(elems) if comp(f, g) == (1, 0)) for f in elems]
    labels = ["%dX+%d" % e for e in elems]
    return FiniteGroup(table, inverse, labels, "AGL(1,%d)" % p)


def frobenius20():
    G = affine(5)
    G.name = "F20"
    return G


def semidihedral(n):
    """Order 2n with n a power of 2: r^n = s^2 = 1, s r s = r^(n/2 - 1)."""
    gens_r = tuple(list(range(1, n)) + [0])
    k = n // 2 - 1
    gens_s = tuple((i * k) % n for i in range(n))
    G, _ = from_permutations(n, [gens_r, gens_s], name="SD%d" % (2 * n))
    return G


def from_table(table, labels=None, name=""):
    return build_group(table, labels, name)


NAMED = {
    "1": trivial,
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "V4": klein,
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "Q8": quaternion,
    "F20": frobenius20,
    "A4": lambda: alternating(4),
}
