"""Linear algebra over Z/p^e and coordinates for finite abelian groups.

Every matrix over the local ring Z/p^e is equivalent to a diagonal matrix
whose entries are powers of p: pick a pivot of least p-adic valuation, it
divides everything else, eliminate. That is all the cohomology engine needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


def _valuation_table(p, e):
    q = p ** e
    val = np.full(q, e, dtype=np.int64)
    for x in range(1, q):
        v, y = 0, x
        while y % p == 0:
            y //= p
            v += 1
        val[x] = v
    return val


def _matrix(A, m):
    """A as an m-row integer matrix; also valid when m == 0."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 2 and A.shape[0] == m:
        return A
    return A.reshape(m, A.size // m if m else 0)


@dataclass
class Elimination:
    """Result of diagonalizing ``A`` over Z/p^e: ``U A V = diag(p^v_0, ..., p^v_{r-1}, 0...)``."""
    p: int
    e: int
    valuations: list      # v_i for the first ``rank`` pivots (all < e)
    V: np.ndarray | None  # column transform (n x n)
    rhs: np.ndarray | None  # U @ rhs, if a right-hand side was supplied
    U: np.ndarray | None
    Uinv: np.ndarray | None
    shape: tuple

    @property
    def rank(self):
        return len(self.valuations)

    @property
    def q(self):
        return self.p ** self.e


def eliminate(A, p, e, rhs=None, track_v=True, track_u=False):
    A = np.array(A, dtype=np.int64) % (p ** e)
    q = p ** e
    m, n = A.shape
    val = _valuation_table(p, e)
    V = np.eye(n, dtype=np.int64) if track_v else None
    R = None if rhs is None else _matrix(rhs, m) % q
    U = np.eye(m, dtype=np.int64) if track_u else None
    Ui = np.eye(m, dtype=np.int64) if track_u else None
    vals = []
    r = 0
    while r < min(m, n):
        sub = A[r:, r:]
        vs = val[sub]
        k = int(vs.argmin())
        v = int(vs.flat[k])
        if v >= e:
            break
        i, j = divmod(k, sub.shape[1])
        i += r
        j += r
        if i != r:
            A[[r, i]] = A[[i, r]]
            if R is not None:
                R[[r, i]] = R[[i, r]]
            if U is not None:
                U[[r, i]] = U[[i, r]]
                Ui[:, [r, i]] = Ui[:, [i, r]]
        if j != r:
            A[:, [r, j]] = A[:, [j, r]]
            if V is not None:
                V[:, [r, j]] = V[:, [j, r]]
        pv = p ** v
        u = int(A[r, r]) // pv
        if u != 1:
            uinv = pow(u, -1, q)
            A[r] = A[r] * uinv % q
            if R is not None:
                R[r] = R[r] * uinv % q
            if U is not None:
                U[r] = U[r] * uinv % q
                Ui[:, r] = Ui[:, r] * u % q
        c = A[r + 1:, r] // pv
        nz = np.flatnonzero(c)
        if len(nz):
            rows = nz + r + 1
            A[rows] = (A[rows] - np.outer(c[nz], A[r])) % q
            if R is not None:
                R[rows] = (R[rows] - np.outer(c[nz], R[r])) % q
            if U is not None:
                U[rows] = (U[rows] - np.outer(c[nz], U[r])) % q
                Ui[:, r] = (Ui[:, r] + Ui[:, rows] @ c[nz]) % q
        d = A[r, r + 1:] // pv
        nz = np.flatnonzero(d)
        if len(nz):
            cols = nz + r + 1
            A[r, cols] = 0
            if V is not None:
                V[:, cols] = (V[:, cols] - np.outer(V[:, r], d[nz])) % q
        vals.append(v)
        r += 1
    return Elimination(p, e, vals, V, R, U, Ui, (m, n))


def kernel(A, p, e):
    """Generators (as columns) of {x : A x = 0 mod p^e}."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    el = eliminate(A, p, e)
    q = p ** e
    cols = []
    for i, v in enumerate(el.valuations):
        if v > 0:
            cols.append(el.V[:, i] * p ** (e - v) % q)
    cols.extend(el.V[:, i] for i in range(el.rank, n))
    if not cols:
        return np.zeros((n, 0), dtype=np.int64)
    return np.stack(cols, axis=1) % q


def solve(A, b, p, e):
    """Some x with A x = b mod p^e, or None."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    b = np.asarray(b, dtype=np.int64).reshape(m) % p ** e
    if n == 0:
        return np.zeros(0, dtype=np.int64) if not b.any() else None
    el = eliminate(A, p, e, rhs=b)
    return _back_solve(el, el.rhs[:, 0], n)


def _back_solve(el, ub, n):
    q = el.q
    y = np.zeros(n, dtype=np.int64)
    for i, v in enumerate(el.valuations):
        pv = el.p ** v
        if ub[i] % pv:
            return None
        y[i] = ub[i] // pv
    if ub[el.rank:].any():
        return None
    return el.V @ y % q


class Solver:
    """Reusable solver for A x = b mod p^e over many right-hand sides."""

    def __init__(self, A, p, e):
        self.A = np.asarray(A, dtype=np.int64)
        self.p, self.e = p, e
        self.n = self.A.shape[1]
        self.el = eliminate(self.A, p, e, track_u=True) if self.n else None

    def __call__(self, b):
        b = np.asarray(b, dtype=np.int64) % self.p ** self.e
        if self.n == 0:
            return np.zeros(0, dtype=np.int64) if not b.any() else None
        return _back_solve(self.el, self.el.U @ b % self.el.q, self.n)


@dataclass
class Quotient:
    """K / B for submodules B <= K of (Z/p^e)^m, K given by generator columns.

    Class coordinates of ``y`` (a combination of K's generators) are
    ``(Uc @ y)[i] mod moduli[i]``; ``lift(c)`` returns an element of K.
    """
    p: int
    e: int
    Kmat: np.ndarray
    moduli: tuple
    Uc: np.ndarray
    Ucinv: np.ndarray
    member: Solver

    @property
    def order(self):
        out = 1
        for d in self.moduli:
            out *= d
        return out

    def coords(self, z):
        """Class coordinates of z in K, or None when z is not in K."""
        sol = self.member(z)
        if sol is None:
            return None
        a = self.Kmat.shape[1]
        y = sol[:a]
        c = self.Uc @ y % self.p ** self.e
        return tuple(int(c[i]) % d for i, d in enumerate(self.moduli))

    def lift(self, c):
        q = self.p ** self.e
        y = self.Ucinv[:, :len(c)] @ np.array(c, dtype=np.int64) % q if len(c) else \
            np.zeros(self.Kmat.shape[1], dtype=np.int64)
        return self.Kmat @ y % q


def quotient(Kmat, Bmat, p, e):
    """Structure of span(Kmat)/span(Bmat), assuming span(Bmat) <= span(Kmat)."""
    q = p ** e
    m = Kmat.shape[0]
    Kmat = _matrix(Kmat, m) % q
    Bmat = _matrix(Bmat, m) % q
    a = Kmat.shape[1]
    KB = np.concatenate([Kmat, Bmat], axis=1)
    member = Solver(KB, p, e)
    if a == 0:
        return Quotient(p, e, Kmat, (), np.zeros((0, 0), np.int64), np.zeros((0, 0), np.int64), member)
    rel = kernel(np.concatenate([Kmat, (-Bmat) % q], axis=1), p, e)[:a]
    if rel.shape[1] == 0:
        rel = np.zeros((a, 1), dtype=np.int64)
    el = eliminate(rel, p, e, track_v=False, track_u=True)
    moduli = []
    keep = []
    for i in range(a):
        v = el.valuations[i] if i < el.rank else e
        d = p ** v
        if d > 1:
            moduli.append(d)
            keep.append(i)
    Uc = el.U[keep] if keep else np.zeros((0, a), dtype=np.int64)
    Ucinv = el.Uinv[:, keep] if keep else np.zeros((a, 0), dtype=np.int64)
    return Quotient(p, e, Kmat, tuple(moduli), Uc, Ucinv, member)


def factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class AbelianCoordinates:
    """Basis of each p-primary part of a finite abelian group given by a table.

    ``parts[p] = (basis, exponents)`` with M_p the internal direct sum of the
    cyclic groups <basis[i]> of order p**exponents[i].
    """

    def __init__(self, M):
        if not M.is_abelian:
            raise ValueError("group is not abelian")
        self.M = M
        self.parts = {}
        self._coords = {}
        self._elem = {}
        orders = M.element_orders
        for p in sorted(factorize(M.order)):
            sub = [x for x in M if _is_power_of(orders[x], p)]
            basis, exps = _p_basis(M, sub, p)
            self.parts[p] = (tuple(basis), tuple(exps))
            table = {}
            for c in itertools.product(*[range(p ** k) for k in exps]):
                x = 0
                for b, k in zip(basis, c):
                    x = M.mt[x][M.power(b, k)]
                table[x] = c
            assert len(table) == len(sub)
            self._coords[p] = table
            self._elem[p] = {c: x for x, c in table.items()}
        self.primes = tuple(self.parts)
        self._split = {}
        expo = M.exponent
        for p in self.primes:
            pe = p ** factorize(expo)[p]
            rest = expo // pe
            u = rest * pow(rest, -1, pe) if pe > 1 else 0
            self._split[p] = u

    def exponent_of(self, p):
        exps = self.parts[p][1]
        return max(exps) if exps else 0

    def component(self, x, p):
        """The p-primary component of x."""
        return self.M.power(x, self._split[p])

    def coords(self, x, p):
        return self._coords[p][self.component(x, p)]

    def element(self, p_coords):
        """Element with the given coordinates; ``p_coords`` maps p -> tuple."""
        x = 0
        for p, c in p_coords.items():
            q = self.parts[p][1]
            c = tuple(int(v) % p ** k for v, k in zip(c, q))
            x = self.M.mt[x][self._elem[p][c]]
        return x

    def invariants(self):
        """Abelian invariants as sorted prime powers."""
        return tuple(sorted(p ** k for p, (_, exps) in self.parts.items() for k in exps))


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _p_basis(M, sub, p):
    """Basis of the abelian p-group ``sub`` chosen by the max-order-in-quotient lift."""
    basis, exps = [], []
    span = {0: ()}
    while len(span) < len(sub):
        best, bestf = None, -1
        for c in sub:
            if c in span:
                continue
            f, y = 0, c
            while y not in span:
                y = M.power(y, p)
                f += 1
            if f > bestf:
                best, bestf = c, f
        y = M.power(best, p ** bestf)
        ks = span[y]
        shift = 0
        for b, k, kk in zip(basis, ks, exps):
            assert k % p ** bestf == 0, "basis lift failed"
            shift = M.mt[shift][M.power(b, k // p ** bestf)]
        b = M.mt[best][M.inverse[shift]]
        basis.append(b)
        exps.append(bestf)
        new = {}
        for x, c in span.items():
            y = x
            for k in range(p ** bestf):
                new[y] = c + (k,)
                y = M.mt[y][b]
        span = new
    return basis, exps
