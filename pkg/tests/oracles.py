"""Brute-force reference computations used as independent oracles by the tests.

Nothing here calls into the library's algorithms; only the raw multiplication
tables of groups are read.
"""

from __future__ import annotations

import itertools


def table(G):
    return [list(r) for r in G.mt]


def perm_closure(gens):
    """All products of the permutations ``gens`` (tuples), identity first."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = [ident]
    known = {ident}
    for p in seen:
        for g in gens:
            q = tuple(p[g[i]] for i in range(n))
            if q not in known:
                known.add(q)
                seen.append(q)
    return seen


def is_isomorphic_census(G, H):
    """Cheap isomorphism invariant: sorted element orders."""
    return sorted(G.element_orders) == sorted(H.element_orders)


def span(mt, gens):
    seen = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for g in gens:
            y = mt[x][g]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def small_generating_set(mt):
    n = len(mt)
    gens = []
    while len(span(mt, gens)) < n:
        cur = span(mt, gens)
        gens.append(max((x for x in range(n) if x not in cur), key=lambda x: len(span(mt, gens + [x]))))
    return gens


def homs_from_gens(mt_a, mt_b, gens, imgs):
    """Extend gens -> imgs to a map A -> B; None unless it is a homomorphism."""
    n = len(mt_a)
    img = {0: 0}
    todo = [0]
    while todo:
        x = todo.pop()
        for g, h in zip(gens, imgs):
            y = mt_a[x][g]
            v = mt_b[img[x]][h]
            if y in img:
                if img[y] != v:
                    return None
            else:
                img[y] = v
                todo.append(y)
    m = [img[x] for x in range(n)]
    for x in range(n):
        for y in range(n):
            if m[mt_a[x][y]] != mt_b[m[x]][m[y]]:
                return None
    return tuple(m)


def automorphisms(G):
    mt = table(G)
    n = len(mt)
    gens = small_generating_set(mt)
    out = set()
    for imgs in itertools.product(range(n), repeat=len(gens)):
        m = homs_from_gens(mt, mt, gens, imgs)
        if m is not None and len(set(m)) == n:
            out.add(m)
    return sorted(out)


def inverse_of(mt, x):
    return next(y for y in range(len(mt)) if mt[x][y] == 0)


def conj_map(mt, x):
    xi = inverse_of(mt, x)
    return tuple(mt[mt[x][y]][xi] for y in range(len(mt)))


def center(G):
    mt = table(G)
    return [x for x in range(len(mt)) if all(mt[x][y] == mt[y][x] for y in range(len(mt)))]


def involutions(G):
    mt = table(G)
    return [x for x in range(1, len(mt)) if mt[x][x] == 0]


def class_sizes(G):
    mt = table(G)
    n = len(mt)
    seen, sizes = set(), []
    for x in range(n):
        if x in seen:
            continue
        cls = {conj_map(mt, y)[x] for y in range(n)}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)


def comp(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


# ---------------------------------------------------------------- abelian cohomology

def cochain_counts(Q, M, action, n):
    """(|Z^n|, |B^n|) over normalized cochains, by listing every cochain."""
    qt, mt = table(Q), table(M)
    q, m = len(qt), len(mt)
    inv = [inverse_of(mt, x) for x in range(m)]
    pos_n = list(itertools.product(range(1, q), repeat=n))

    def mk(values, deg):
        c = {}
        for p in itertools.product(range(q), repeat=deg):
            c[p] = 0
        for p, v in zip(itertools.product(range(1, q), repeat=deg), values):
            c[p] = v
        return c

    def d(c, deg):
        out = {}
        for p in itertools.product(range(q), repeat=deg + 1):
            acc = action[p[0]][c[p[1:]]]
            for i in range(1, deg + 1):
                merged = p[:i - 1] + (qt[p[i - 1]][p[i]],) + p[i + 1:]
                v = c[merged]
                acc = mt[acc][v if i % 2 == 0 else inv[v]]
            v = c[p[:deg]]
            acc = mt[acc][v if (deg + 1) % 2 == 0 else inv[v]]
            out[p] = acc
        return out

    cocycles = 0
    for vals in itertools.product(range(m), repeat=len(pos_n)):
        c = mk(vals, n)
        if all(v == 0 for v in d(c, n).values()):
            cocycles += 1
    bounds = set()
    for vals in itertools.product(range(m), repeat=(q - 1) ** (n - 1)):
        b = d(mk(vals, n - 1), n - 1)
        bounds.add(tuple(b[p] for p in itertools.product(range(q), repeat=n)))
    return cocycles, len(bounds)


# ---------------------------------------------------------------- non-abelian 2-cocycles

def _lifts(L):
    G = L.G
    mt = table(G)
    n = len(mt)
    inn = [conj_map(mt, x) for x in range(n)]
    out = [[tuple(range(n))]]
    for s in range(1, L.Q.order):
        out.append(sorted({comp(i, L.kappa[s]) for i in inn}))
    return out


def normalized_cocycles(L, cap=200000):
    """Every normalized (f, g) satisfying both cocycle identities, by pruned backtracking."""
    Q, G = L.Q, L.G
    qt, mt = table(Q), table(G)
    q, n = len(qt), len(mt)
    inner_of = {}
    for x in range(n):
        inner_of.setdefault(conj_map(mt, x), []).append(x)
    pairs = [(s, t) for s in range(1, q) for t in range(1, q)]
    rank = {p: i for i, p in enumerate(pairs)}
    # the triple (s, t, u) can be tested once every g it touches is assigned
    triples_at = [[] for _ in pairs]
    for s, t, u in itertools.product(range(1, q), repeat=3):
        need = [(t, u), (s, qt[t][u]), (s, t), (qt[s][t], u)]
        last = max(rank.get(p, -1) for p in need)
        triples_at[last].append((s, t, u))
    out = []
    for f in itertools.product(*_lifts(L)):
        options = []
        for s, t in pairs:
            a = comp(comp(f[s], f[t]), _invert(f[qt[s][t]]))
            options.append(inner_of.get(a, []))
        if any(not o for o in options):
            continue
        g = [[0] * q for _ in range(q)]

        def rec(k):
            if k == len(pairs):
                out.append((f, tuple(tuple(r) for r in g)))
                if len(out) > cap:
                    raise RuntimeError("oracle cap exceeded")
                return
            s, t = pairs[k]
            for x in options[k]:
                g[s][t] = x
                ok = True
                for a, b, c in triples_at[k]:
                    lhs = mt[f[a][g[b][c]]][g[a][qt[b][c]]]
                    rhs = mt[g[a][b]][g[qt[a][b]][c]]
                    if lhs != rhs:
                        ok = False
                        break
                if ok:
                    rec(k + 1)
            g[s][t] = 0

        rec(0)
    return out


def _invert(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def gauge(c, h, L, _cache={}):
    """(f, g) moved by h: f'_s = int(h_s) f_s, g'_st = h_s f_s(h_t) g_st h_st^-1."""
    key = id(L)
    if key not in _cache or _cache[key][0] is not L:
        mt = table(L.G)
        _cache[key] = (L, table(L.Q), mt, [conj_map(mt, x) for x in range(len(mt))],
                       [inverse_of(mt, x) for x in range(len(mt))])
    _, qt, mt, inn, inv = _cache[key]
    f, g = c
    q = len(qt)
    f2 = tuple(comp(inn[h[s]], f[s]) if h[s] else f[s] for s in range(q))
    g2 = tuple(tuple(mt[mt[mt[h[s]][f[s][h[t]]]][g[s][t]]][inv[h[qt[s][t]]]]
                     for t in range(q)) for s in range(q))
    return f2, g2


def _orbits(L, cocycles):
    q = L.Q.order
    gens = small_generating_set(table(L.G))
    index = {c: i for i, c in enumerate(cocycles)}
    parent = list(range(len(cocycles)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    moves = []
    for s in range(1, q):
        for x in gens:
            h = [0] * q
            h[s] = x
            moves.append(tuple(h))
    for c, i in index.items():
        for h in moves:
            a, b = find(i), find(index[gauge(c, h, L)])
            if a != b:
                parent[a] = b
    return [find(i) for i in range(len(cocycles))]


def count_classes(L, cocycles):
    """Orbits of the gauge group (normalized h: Q -> G) on a set of normalized cocycles."""
    return len(set(_orbits(L, cocycles)))


def neutral_class_count(L, cocycles):
    """Number of orbits containing a cocycle with g identically 1."""
    roots = _orbits(L, cocycles)
    return len({r for c, r in zip(cocycles, roots) if all(v == 0 for row in c[1] for v in row)})
