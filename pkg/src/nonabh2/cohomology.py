"""Cohomology of a finite group Q with coefficients in a finite abelian Q-module.

Cochains are normalized and stored as integer arrays of shape ``(|Q|,)*n``
holding element indices of M (a 0-cochain is a 0-d array). The module is
written multiplicatively through its table, but the differential is the
usual one for a left module,

    (dc)(s_1..s_{n+1}) = s_1.c(s_2..) - c(s_1 s_2, ..) + ... + (-1)^{n+1} c(s_1..s_n).

Two independent engines compute H^n: exhaustive enumeration of cochains
(the oracle, small cases only) and linear algebra over Z/p^e on each
p-primary part of M (the default).

Hypercohomology of a two-term complex A --rho--> B in degrees -1 and 0 uses
the total complex T^i = C^{i+1}(A) + C^i(B) with D(a, b) = (-da, db + rho(a)).
With this sign choice the connecting map H^{i+1}(A) -> H^{i+1}(B) of the
long exact sequence is plain rho_*.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import limits, zmod
from .errors import InvalidModule, SizeLimitExceeded
from .groups import FiniteGroup, compose, is_automorphism


@dataclass(frozen=True, eq=False)
class QModule:
    Q: FiniteGroup
    M: FiniteGroup
    action: tuple

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(tuple(int(v) for v in a) for a in self.action))
        if not self.M.is_abelian:
            raise InvalidModule("coefficient group is not abelian")
        if len(self.action) != self.Q.order:
            raise InvalidModule("need one automorphism per element of Q")
        for s, a in enumerate(self.action):
            if not is_automorphism(self.M, a):
                raise InvalidModule("action of %d is not an automorphism" % s)
        for s in self.Q:
            for t in self.Q:
                if compose(self.action[s], self.action[t]) != self.action[self.Q.mt[s][t]]:
                    raise InvalidModule("action is not a homomorphism at %s" % ((s, t),))

    @classmethod
    def trivial(cls, Q, M):
        ident = tuple(range(M.order))
        return cls(Q, M, [ident] * Q.order)

    def act(self, s, m):
        return self.action[s][m]

    @cached_property
    def coordinates(self):
        return zmod.AbelianCoordinates(self.M)

    @cached_property
    def action_array(self):
        return np.array(self.action, dtype=np.int64).reshape(self.Q.order, self.M.order)

    def action_matrix(self, p, s):
        """Integer matrix of s acting on the p-part, in basis coordinates."""
        co = self.coordinates
        basis, _ = co.parts[p]
        cols = [co.coords(self.action[s][b], p) for b in basis]
        return np.array(cols, dtype=np.int64).T.reshape(len(basis), len(basis))

    def restrict(self, S, inclusion):
        """Module over the subgroup S (with ``inclusion`` image tuple into Q)."""
        return QModule(S, self.M, [self.action[inclusion[s]] for s in S])


# ---------------------------------------------------------------- cochains

def positions(Q, n):
    """Normalized positions: n-tuples of non-identity elements, lex order."""
    return list(itertools.product(range(1, Q.order), repeat=n))


def zero_cochain(module, n):
    return np.zeros((module.Q.order,) * n, dtype=np.int64)


def cochain_from_values(module, n, values):
    """Normalized cochain taking ``values[k]`` at the k-th normalized position."""
    c = zero_cochain(module, n)
    for pos, v in zip(positions(module.Q, n), values):
        c[pos] = v
    return c


def normalized_values(c, Q):
    n = np.ndim(c)
    return tuple(int(c[pos]) for pos in positions(Q, n))


def is_normalized(c):
    c = np.asarray(c)
    for axis in range(c.ndim):
        if np.take(c, 0, axis=axis).any():
            return False
    return True


def coboundary(c, module):
    """The differential of an n-cochain, evaluated directly from the tables."""
    c = np.asarray(c, dtype=np.int64)
    n = c.ndim
    q = module.Q.order
    MT = module.M.table
    Minv = np.array(module.M.inverse, dtype=np.int64)
    QT = module.Q.table
    act = module.action_array
    idx = np.indices((q,) * (n + 1)) if n + 1 else []
    # s_1 . c(s_2, ..., s_{n+1})
    out = act[idx[0], c[tuple(idx[1:])]]
    for i in range(1, n + 1):
        args = list(idx[:i - 1]) + [QT[idx[i - 1], idx[i]]] + list(idx[i + 1:])
        term = c[tuple(args)]
        out = MT[out, term if i % 2 == 0 else Minv[term]]
    last = c[tuple(idx[:n])]
    out = MT[out, last if (n + 1) % 2 == 0 else Minv[last]]
    return out


def add(c1, c2, module):
    return module.M.table[np.asarray(c1), np.asarray(c2)]


def negate(c, module):
    return np.array(module.M.inverse, dtype=np.int64)[np.asarray(c)]


def subtract(c1, c2, module):
    return add(c1, negate(c2, module), module)


def restrict_cochain(c, inclusion):
    """Pull an n-cochain back along a subgroup inclusion (image tuple)."""
    c = np.asarray(c)
    inc = np.asarray(inclusion)
    return c[np.ix_(*([inc] * c.ndim))] if c.ndim else c.copy()


# ---------------------------------------------------------------- linear engine

def _check_linear_caps(module, n):
    lim = limits.current()
    if n > lim.max_degree + 1:
        raise SizeLimitExceeded("cochain degree", n, lim.max_degree + 1)
    if module.Q.order > lim.max_q_order:
        raise SizeLimitExceeded("|Q| for cohomology", module.Q.order, lim.max_q_order)
    if module.M.order > lim.max_module_order:
        raise SizeLimitExceeded("|M| for cohomology", module.M.order, lim.max_module_order)


def _delta_matrix(module, p, n):
    """Matrix of d: C^n -> C^{n+1} on the p-part, in basis coordinates."""
    Q = module.Q
    q = Q.order
    co = module.coordinates
    r = len(co.parts[p][0]) if p in co.parts else 0
    src = positions(Q, n) if n >= 0 else []
    dst = positions(Q, n + 1)
    if r == 0 or not dst:
        return np.zeros((len(dst) * r, len(src) * r), dtype=np.int64)
    cells = len(dst) * r * len(src) * r
    if cells > 4 * 10**7:
        raise SizeLimitExceeded("coboundary matrix cells", cells, 4 * 10**7)
    pos_index = {s: i for i, s in enumerate(src)}
    D = np.zeros((len(dst) * r, len(src) * r), dtype=np.int64)
    T = [module.action_matrix(p, s) for s in range(q)]
    eye = np.eye(r, dtype=np.int64)
    mt = Q.mt
    for j, tup in enumerate(dst):
        rows = slice(j * r, (j + 1) * r)

        def put(arg, mat):
            if any(a == 0 for a in arg):
                return
            k = pos_index[arg]
            D[rows, k * r:(k + 1) * r] += mat

        put(tup[1:], T[tup[0]])
        for i in range(1, n + 1):
            prod = mt[tup[i - 1]][tup[i]]
            put(tup[:i - 1] + (prod,) + tup[i + 1:], eye if i % 2 == 0 else -eye)
        put(tup[:n], eye if (n + 1) % 2 == 0 else -eye)
    return D


def _to_coords(c, module, p):
    co = module.coordinates
    vec = []
    for pos in positions(module.Q, np.ndim(c)):
        vec.extend(co.coords(int(np.asarray(c)[pos]), p))
    return np.array(vec, dtype=np.int64)


def _from_coords(vecs, module, n):
    """Cochain from per-prime coordinate vectors (dict p -> vector)."""
    co = module.coordinates
    c = zero_cochain(module, n)
    for k, pos in enumerate(positions(module.Q, n)):
        parts = {}
        for p, v in vecs.items():
            r = len(co.parts[p][0])
            parts[p] = tuple(v[k * r:(k + 1) * r])
        c[pos] = co.element(parts)
    return c


class _PrimeComplex:
    """H = ker(D_out) / im(D_in) on a coordinate space with exponents ``exps``."""

    def __init__(self, p, e, D_in, D_out, exps, exps_out):
        self.p, self.e = p, e
        q = p ** e
        scale = np.array([p ** (e - k) for k in exps_out], dtype=np.int64)
        self.D_out = D_out
        self.scaled_out = (scale[:, None] * D_out) % q if len(scale) else D_out
        rel = [p ** k * np.eye(len(exps), dtype=np.int64)[:, i]
               for i, k in enumerate(exps) if k < e]
        R = np.stack(rel, axis=1) if rel else np.zeros((len(exps), 0), dtype=np.int64)
        self.n_in = D_in.shape[1] if D_in.ndim == 2 else 0
        self.B = np.concatenate([D_in.reshape(len(exps), self.n_in), R], axis=1) % q
        self.exps = exps

    @cached_property
    def boundary_solver(self):
        return zmod.Solver(self.B, self.p, self.e)

    @cached_property
    def structure(self):
        K = zmod.kernel(self.scaled_out, self.p, self.e) if self.scaled_out.shape[0] else \
            np.eye(len(self.exps), dtype=np.int64)
        return zmod.quotient(K, self.B, self.p, self.e)

    def is_cycle(self, v):
        return not (self.scaled_out @ v % self.p ** self.e).any()

    def preimage(self, v):
        sol = self.boundary_solver(v)
        return None if sol is None else sol[:self.n_in]


class CohomologyGroup:
    """A finite abelian group of cohomology classes.

    Classes are indexed ``0..order-1`` with 0 the zero class; ``classify``
    maps a cocycle to its index and ``representatives[i]`` is a cocycle in
    class i.
    """

    method = "abstract"

    def __init__(self, degree):
        self.degree = degree

    def __len__(self):
        return self.order

    @cached_property
    def table(self):
        reps = self.representatives
        return [[self.classify(self._add(a, b)) for b in reps] for a in reps]

    def add(self, i, j):
        return self.classify(self._add(self.representatives[i], self.representatives[j]))

    def same_class(self, a, b):
        return self.is_coboundary(self._sub(a, b))

    def __repr__(self):
        return "<H^%d order %d invariants %s via %s>" % (self.degree, self.order,
                                                        self.invariants, self.method)


class _LinearBase(CohomologyGroup):
    """Mixed-radix indexing over the per-prime quotient structures in ``_parts``."""

    method = "linear"

    @cached_property
    def _radix(self):
        out = []
        for p in self._parts:
            for d in self._parts[p].structure.moduli:
                out.append((p, d))
        return out

    @property
    def order(self):
        out = 1
        for _, d in self._radix:
            out *= d
        return out

    @cached_property
    def invariants(self):
        return tuple(sorted(d for _, d in self._radix))

    def coordinates(self, c):
        out = []
        for p, part in self._parts.items():
            cc = part.structure.coords(self._vec(c, p))
            if cc is None:
                raise ValueError("cochain is not a cocycle")
            out.extend(cc)
        return tuple(out)

    def classify(self, c):
        idx = 0
        for v, (_, d) in zip(self.coordinates(c), self._radix):
            idx = idx * d + v
        return idx

    def is_cocycle(self, c):
        return all(part.is_cycle(self._vec(c, p)) for p, part in self._parts.items())

    def _digits(self, i):
        out = []
        for _, d in reversed(self._radix):
            out.append(i % d)
            i //= d
        return out[::-1]

    def representative(self, i):
        digits = self._digits(i)
        vecs = {}
        k = 0
        for p, part in self._parts.items():
            m = len(part.structure.moduli)
            vecs[p] = part.structure.lift(digits[k:k + m])
            k += m
        return self._unvec(vecs, self.degree)

    @cached_property
    def representatives(self):
        if self.order > limits.current().max_order:
            raise SizeLimitExceeded("cohomology class listing", self.order, limits.current().max_order)
        return [self.representative(i) for i in range(self.order)]


class LinearCohomology(_LinearBase):
    def __init__(self, module, n):
        super().__init__(n)
        _check_linear_caps(module, n)
        self.module = module
        co = module.coordinates
        self._parts = {}
        for p in co.primes:
            exps = co.parts[p][1]
            e = max(exps)
            r = len(exps)
            D_in = _delta_matrix(module, p, n - 1) if n > 0 else \
                np.zeros((r, 0), dtype=np.int64)
            D_out = _delta_matrix(module, p, n)
            N, N1 = len(positions(module.Q, n)), len(positions(module.Q, n + 1))
            self._parts[p] = _PrimeComplex(p, e, D_in, D_out, list(exps) * N, list(exps) * N1)

    def _vec(self, c, p):
        return _to_coords(c, self.module, p)

    def _unvec(self, vecs, n):
        return _from_coords(vecs, self.module, n)

    def _add(self, a, b):
        return add(a, b, self.module)

    def _sub(self, a, b):
        return subtract(a, b, self.module)

    def is_coboundary(self, c):
        return self.preimage(c) is not None

    def preimage(self, c):
        """An (n-1)-cochain b with db = c, or None."""
        n = self.degree
        vecs = {}
        for p, part in self._parts.items():
            x = part.preimage(_to_coords(c, self.module, p))
            if x is None:
                return None
            vecs[p] = x
        if n == 0:
            return None if np.asarray(c).any() else zero_cochain(self.module, 0)
        return _from_coords(vecs, self.module, n - 1)


class _EnumBase(CohomologyGroup):
    method = "enumerate"

    @property
    def order(self):
        return len(self._reps)

    @cached_property
    def invariants(self):
        inverse = [next(j for j in range(self.order) if self.table[i][j] == 0) for i in range(self.order)]
        return zmod.AbelianCoordinates(FiniteGroup(self.table, inverse)).invariants()


class EnumeratedCohomology(_EnumBase):
    """Brute force: list every normalized cochain. Independent of the linear engine."""

    def __init__(self, module, n):
        super().__init__(n)
        self.module = module
        m = module.M.order
        npos = len(positions(module.Q, n))
        nprev = len(positions(module.Q, n - 1)) if n > 0 else 0
        cap = limits.current().max_enum_cochains
        for count in (m ** npos, m ** nprev):
            if count > cap:
                raise SizeLimitExceeded("cochain enumeration", count, cap)
        self.cocycles = []
        for vals in itertools.product(range(m), repeat=npos):
            c = cochain_from_values(module, n, vals)
            if not coboundary(c, module).any():
                self.cocycles.append(vals)
        if n == 0:
            self.boundaries = {(0,) * npos}
        else:
            self.boundaries = {normalized_values(coboundary(cochain_from_values(module, n - 1, v), module), module.Q)
                               for v in itertools.product(range(m), repeat=nprev)}
        self._cocycle_set = set(self.cocycles)
        self._class_of = {}
        self._reps = []
        mt = module.M.mt
        blist = sorted(self.boundaries)
        for z in self.cocycles:
            if z in self._class_of:
                continue
            k = len(self._reps)
            self._reps.append(z)
            for b in blist:
                self._class_of[tuple(mt[x][y] for x, y in zip(z, b))] = k

    def _key(self, c):
        return normalized_values(np.asarray(c), self.module.Q)

    def _add(self, a, b):
        return add(a, b, self.module)

    def _sub(self, a, b):
        return subtract(a, b, self.module)

    def is_cocycle(self, c):
        return self._key(c) in self._cocycle_set

    def is_coboundary(self, c):
        return self._key(c) in self.boundaries

    def classify(self, c):
        key = self._key(c)
        if key not in self._class_of:
            raise ValueError("cochain is not a cocycle")
        return self._class_of[key]

    @cached_property
    def representatives(self):
        return [cochain_from_values(self.module, self.degree, z) for z in self._reps]

    @property
    def cocycle_count(self):
        return len(self.cocycles)

    @property
    def coboundary_count(self):
        return len(self.boundaries)



def cohomology(module, n, method="auto"):
    """H^n(Q, M) as a :class:`CohomologyGroup`.

    ``method`` is ``"linear"``, ``"enumerate"`` or ``"auto"`` (linear).
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if method == "enumerate":
        return EnumeratedCohomology(module, n)
    return LinearCohomology(module, n)


# ---------------------------------------------------------------- hypercohomology

@dataclass(frozen=True, eq=False)
class ComplexTwoTerm:
    """A --rho--> B, A in degree -1 and B in degree 0."""
    A: QModule
    B: QModule
    rho: tuple

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(int(v) for v in self.rho))
        if self.A.Q is not self.B.Q:
            raise InvalidModule("A and B must be modules over the same Q")
        A, B, rho = self.A.M, self.B.M, self.rho
        if len(rho) != A.order:
            raise InvalidModule("rho has wrong length")
        for x in A:
            for y in A:
                if rho[A.mt[x][y]] != B.mt[rho[x]][rho[y]]:
                    raise InvalidModule("rho is not a homomorphism")
        for s in self.A.Q:
            for a in A:
                if rho[self.A.act(s, a)] != self.B.act(s, rho[a]):
                    raise InvalidModule("rho is not Q-equivariant at %s" % ((s, a),))

    @property
    def Q(self):
        return self.A.Q

    @classmethod
    def zero_to(cls, B):
        from .catalog import trivial
        return cls(QModule.trivial(B.Q, trivial()), B, (0,))

    @classmethod
    def to_zero(cls, A):
        from .catalog import trivial
        return cls(A, QModule.trivial(A.Q, trivial()), (0,) * A.M.order)

    @classmethod
    def identity(cls, A):
        return cls(A, A, tuple(range(A.M.order)))


class HyperChain:
    """An element (a, b) of the total complex T^i = C^{i+1}(A) + C^i(B)."""

    def __init__(self, a, b):
        self.a = np.asarray(a, dtype=np.int64)
        self.b = np.asarray(b, dtype=np.int64)

    def key(self, Q):
        return (normalized_values(self.a, Q), normalized_values(self.b, Q))


def total_differential(x, cx):
    """D(a, b) = (-da, db + rho(a)); a chain with 0-d ``a`` lives in T^-1 and has no b."""
    rho = np.array(cx.rho, dtype=np.int64)
    da = negate(coboundary(x.a, cx.A), cx.A)
    if x.a.ndim == 0:
        return HyperChain(da, rho[x.a])
    return HyperChain(da, add(coboundary(x.b, cx.B), rho[x.a], cx.B))


def _rho_matrix(cx, p, N):
    coA, coB = cx.A.coordinates, cx.B.coordinates
    if p not in coA.parts or p not in coB.parts:
        return None
    basisA = coA.parts[p][0]
    cols = [coB.coords(cx.rho[b], p) for b in basisA]
    small = np.array(cols, dtype=np.int64).T.reshape(len(coB.parts[p][0]), len(basisA))
    return np.kron(np.eye(N, dtype=np.int64), small)


class Hypercohomology(_LinearBase):
    """H^i of the total complex, via the linear engine."""

    def __init__(self, cx, i):
        super().__init__(i)
        for m in (cx.A, cx.B):
            _check_linear_caps(m, i + 2)
        self.cx = cx
        Q = cx.Q
        primes = sorted(set(cx.A.coordinates.primes) | set(cx.B.coordinates.primes))
        self._parts = {}
        self._layout = {}
        for p in primes:
            rA = len(cx.A.coordinates.parts.get(p, ((), ()))[0])
            rB = len(cx.B.coordinates.parts.get(p, ((), ()))[0])
            eA = cx.A.coordinates.parts.get(p, ((), ()))[1]
            eB = cx.B.coordinates.parts.get(p, ((), ()))[1]
            e = max(list(eA) + list(eB))

            def npos(k):
                return len(positions(Q, k)) if k >= 0 else 0

            def dA(k):
                return _delta_matrix(cx.A, p, k) if rA else np.zeros((npos(k + 1) * rA, npos(k) * rA), np.int64)

            def dB(k):
                if k < 0:
                    return np.zeros((npos(0) * rB, 0), np.int64)
                return _delta_matrix(cx.B, p, k) if rB else np.zeros((npos(k + 1) * rB, npos(k) * rB), np.int64)

            def rho(k):
                m = _rho_matrix(cx, p, npos(k))
                return m if m is not None else np.zeros((npos(k) * rB, npos(k) * rA), np.int64)

            def D(k):
                # T^k -> T^{k+1}; T^k = C^{k+1}(A) + C^k(B)
                top = np.concatenate([-dA(k + 1), np.zeros((npos(k + 2) * rA, npos(k) * rB), np.int64)], axis=1)
                if k >= 0:
                    bot = np.concatenate([rho(k + 1), dB(k)], axis=1)
                else:
                    bot = np.concatenate([rho(k + 1), np.zeros((npos(0) * rB, 0), np.int64)], axis=1)
                return np.concatenate([top, bot], axis=0)

            exps_mid = list(eA) * npos(i + 1) + list(eB) * npos(i)
            exps_out = list(eA) * npos(i + 2) + list(eB) * npos(i + 1)
            self._parts[p] = _PrimeComplex(p, e, D(i - 1), D(i), exps_mid, exps_out)
            self._layout[p] = (rA, rB)

    def _vec(self, x, p):
        rA, rB = self._layout[p]
        va = _to_coords(x.a, self.cx.A, p) if rA else np.zeros(0, np.int64)
        vb = _to_coords(x.b, self.cx.B, p) if rB else np.zeros(0, np.int64)
        return np.concatenate([va, vb])

    def _unvec(self, vecs, i):
        Q = self.cx.Q
        NA = len(positions(Q, i + 1))
        va, vb = {}, {}
        for p, v in vecs.items():
            rA, rB = self._layout[p]
            if rA:
                va[p] = v[:NA * rA]
            if rB:
                vb[p] = v[NA * rA:]
        a = _from_coords(va, self.cx.A, i + 1)
        b = _from_coords(vb, self.cx.B, i) if i >= 0 else np.zeros((), np.int64)
        return HyperChain(a, b)

    def _add(self, x, y):
        return HyperChain(add(x.a, y.a, self.cx.A), add(x.b, y.b, self.cx.B))

    def _sub(self, x, y):
        return HyperChain(subtract(x.a, y.a, self.cx.A), subtract(x.b, y.b, self.cx.B))

    def is_coboundary(self, x):
        return all(part.preimage(self._vec(x, p)) is not None for p, part in self._parts.items())


class EnumeratedHypercohomology(_EnumBase):
    """Brute-force oracle for hypercohomology: enumerate the total complex."""

    def __init__(self, cx, i):
        super().__init__(i)
        self.cx = cx
        Q = cx.Q
        mA, mB = cx.A.M.order, cx.B.M.order
        nA, nB = len(positions(Q, i + 1)), len(positions(Q, i)) if i >= 0 else 0
        pA = len(positions(Q, i)) if i >= 0 else 0
        pB = len(positions(Q, i - 1)) if i >= 1 else 0
        cap = limits.current().max_enum_cochains
        size = mA ** nA * mB ** nB
        prev = mA ** pA * mB ** pB
        if max(size, prev) > cap:
            raise SizeLimitExceeded("total complex enumeration", max(size, prev), cap)
        self.cocycles = []
        for va in itertools.product(range(mA), repeat=nA):
            for vb in itertools.product(range(mB), repeat=nB):
                x = self._chain(va, vb, i)
                d = total_differential(x, cx)
                if not d.a.any() and not d.b.any():
                    self.cocycles.append((va, vb))
        self.boundaries = set()
        if i >= 0:
            for va in itertools.product(range(mA), repeat=pA):
                for vb in itertools.product(range(mB), repeat=pB):
                    x = self._chain(va, vb, i - 1)
                    self.boundaries.add(total_differential(x, cx).key(Q))
        else:
            self.boundaries.add(((0,) * nA, ()))
        self._class_of = {}
        self._reps = []
        mtA, mtB = cx.A.M.mt, cx.B.M.mt
        for z in self.cocycles:
            if z in self._class_of:
                continue
            k = len(self._reps)
            self._reps.append(z)
            for ba, bb in self.boundaries:
                key = (tuple(mtA[x][y] for x, y in zip(z[0], ba)),
                       tuple(mtB[x][y] for x, y in zip(z[1], bb)))
                self._class_of[key] = k

    def _chain(self, va, vb, i):
        a = cochain_from_values(self.cx.A, i + 1, va)
        b = cochain_from_values(self.cx.B, i, vb) if i >= 0 else np.zeros((), np.int64)
        return HyperChain(a, b)

    def _add(self, x, y):
        return HyperChain(add(x.a, y.a, self.cx.A), add(x.b, y.b, self.cx.B))

    def _sub(self, x, y):
        return HyperChain(subtract(x.a, y.a, self.cx.A), subtract(x.b, y.b, self.cx.B))

    def is_cocycle(self, x):
        d = total_differential(x, self.cx)
        return not d.a.any() and not d.b.any()

    def is_coboundary(self, x):
        return x.key(self.cx.Q) in self.boundaries

    def classify(self, x):
        key = x.key(self.cx.Q)
        if key not in self._class_of:
            raise ValueError("not a cocycle of the total complex")
        return self._class_of[key]

    @cached_property
    def representatives(self):
        return [self._chain(va, vb, self.degree) for va, vb in self._reps]



def hypercohomology(cx, i, method="auto"):
    if method == "enumerate":
        return EnumeratedHypercohomology(cx, i)
    return Hypercohomology(cx, i)


# ---------------------------------------------------------------- long exact sequence

@dataclass
class LESReport:
    exact: bool
    checked: list = field(default_factory=list)
    first_failure: str | None = None

    def __bool__(self):
        return self.exact


def les_check(cx, method="auto", top=2):
    """Exactness of H^i(B) -> HH^i -> H^{i+1}(A) -> H^{i+1}(B) -> HH^{i+1} ...

    Checked at H^0(B) and at every HH^i, H^{i+1}(A), H^{i+1}(B) for
    i = 0..top, with the maps b -> (0, b), (a, b) -> a and rho_*.
    """
    A, B = cx.A, cx.B
    HA = {k: cohomology(A, k, method) for k in range(0, top + 2)}
    HB = {k: cohomology(B, k, method) for k in range(0, top + 2)}
    HH = {k: hypercohomology(cx, k, method) for k in range(0, top + 1)}
    rho = np.array(cx.rho, dtype=np.int64)

    def rho_star(k):
        return [HB[k].classify(rho[z]) for z in HA[k].representatives]

    def inc(k):
        za = lambda: zero_cochain(A, k + 1)
        return [HH[k].classify(HyperChain(za(), z)) for z in HB[k].representatives]

    def proj(k):
        return [HA[k + 1].classify(x.a) for x in HH[k].representatives]

    def exact_at(name, f_in, f_out):
        image = set(f_in)
        kern = {j for j, v in enumerate(f_out) if v == 0}
        return name, image == kern

    checks = [exact_at("H^0(B)", rho_star(0), inc(0))]
    for k in range(0, top + 1):
        checks.append(exact_at("HH^%d" % k, inc(k), proj(k)))
        checks.append(exact_at("H^%d(A)" % (k + 1), proj(k), rho_star(k + 1)))
        if k + 1 <= top:
            checks.append(exact_at("H^%d(B)" % (k + 1), rho_star(k + 1), inc(k + 1)))
    first = next((name for name, ok in checks if not ok), None)
    return LESReport(first is None, checks, first)
