"""The shipped example corpus: kernels, extensions, G-spaces, complexes and cocycles.

Everything is rebuilt deterministically from the catalog; ``write_corpus``
serializes it to JSON (the files under ``data/corpus`` were produced this way).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from pathlib import Path

from . import catalog as C
from . import cohomology as coh
from . import extensions as X_
from . import homogeneous as Hm
from . import io
from . import kernels as K
from .groups import (center, direct_product, identity_map, inner_automorphisms,
                     minimal_normal_subgroups)

CORPUS_DIR = Path(__file__).parent / "data" / "corpus"


def _kernel_by_index(Q, G, k):
    return list(K.kernels_from_out(Q, G))[k]


def d5_outer_kernel():
    """Q = Z/2 acting on D5 through its non-inner outer class."""
    Q, G = C.cyclic(2), C.dihedral(5)
    od = inner_automorphisms(G)
    tau = od.automorphisms[od.out_representatives[1]]
    return K.validate_kernel(Q, G, [identity_map(G), tau])


def inversion_kernel(n=4):
    Q, G = C.cyclic(2), C.cyclic(n)
    return K.validate_kernel(Q, G, [identity_map(G), tuple((-x) % n for x in G)])


def f20_extension():
    """The affine group of F_5 over its index-2 subgroup {X -> +-X + b}."""
    E = C.frobenius20()
    return X_.extension_from_normal(E, range(10), "G10", "Z2")


@lru_cache(maxsize=None)
def kernels():
    """(name, kernel) pairs: |G| <= 16, |Q| <= 8."""
    Z2, Z3, Z4, V4 = C.cyclic(2), C.cyclic(3), C.cyclic(4), C.klein()
    S3, D4, Q8 = C.symmetric(3), C.dihedral(4), C.quaternion()
    out = [
        ("trivial", K.trivial_kernel(C.trivial(), C.trivial())),
        ("z2-on-z2", K.trivial_kernel(Z2, Z2)),
        ("z2-on-z4-trivial", K.trivial_kernel(Z2, Z4)),
        ("z2-on-z4-inversion", inversion_kernel(4)),
        ("z2-on-z3-inversion", inversion_kernel(3)),
        ("v4-on-z2", K.trivial_kernel(V4, Z2)),
        ("z4-on-z4-inversion", _kernel_by_index(Z4, Z4, 1)),
        ("z2-on-v4-swap", _kernel_by_index(Z2, V4, 1)),
        ("s3-on-v4", _kernel_by_index(S3, V4, 9)),
        ("z2-on-z2xz4", _kernel_by_index(Z2, C.abelian(2, 4), 2)),
        ("d4-on-z2", K.trivial_kernel(D4, Z2)),
        ("z2-on-d5-remark", d5_outer_kernel()),
        ("z2-on-d5-trivial", K.trivial_kernel(Z2, C.dihedral(5))),
        ("z2-on-s3", K.trivial_kernel(Z2, S3)),
        ("v4-on-q8", K.trivial_kernel(V4, Q8)),
        ("z2-on-q8-outer", _kernel_by_index(Z2, Q8, 1)),
        ("z3-on-q8-outer", _kernel_by_index(Z3, Q8, 1)),
        ("s3-on-q8-full", _kernel_by_index(S3, Q8, 9)),
        ("z4-on-q8-outer", _kernel_by_index(Z4, Q8, 1)),
        ("z2-on-d4-outer", _kernel_by_index(Z2, D4, 1)),
        ("z2-on-dic3-outer", _kernel_by_index(Z2, C.dicyclic(3), 1)),
        ("z2-on-a4-outer", _kernel_by_index(Z2, C.alternating(4), 1)),
        ("z2-on-d8-obstructed", _kernel_by_index(Z2, C.dihedral(8), 3)),
        ("z2-on-q16-obstructed", _kernel_by_index(Z2, C.dicyclic(4), 3)),
        ("v4-on-d8", _kernel_by_index(V4, C.dihedral(8), 5)),
        ("v4-on-d8-obstructed", _kernel_by_index(V4, C.dihedral(8), 3)),
    ]
    return tuple(out)


@lru_cache(maxsize=None)
def extensions():
    """(name, extension) pairs: hand-picked groups plus one per class of selected kernels."""
    Z2, Z4 = C.cyclic(2), C.cyclic(4)
    Q8, SD = C.quaternion(), C.semidihedral(8)
    out = [
        ("f20", f20_extension()),
        ("q8-over-z4", X_.extension_from_normal(Q8, Q8.generate([1]), "Z4", "Z2")),
        ("d4-over-z4", X_.extension_from_normal(C.dihedral(4), range(4), "Z4", "Z2")),
        ("z4-over-z2", X_.extension_from_normal(Z4, (0, 2), "Z2", "Z2")),
        ("s3-over-z3", X_.extension_from_normal(C.symmetric(3), C.symmetric(3).generate(
            [x for x in C.symmetric(3) if C.symmetric(3).element_orders[x] == 3]), "Z3", "Z2")),
        ("q8-over-center", X_.extension_from_normal(Q8, (0, 2), "Z2", "V4")),
        ("d4-over-center", X_.extension_from_normal(C.dihedral(4), (0, 2), "Z2", "V4")),
        ("a4-over-v4", X_.extension_from_normal(C.alternating(4), _v4_in_a4(), "V4", "Z3")),
        ("sd16-over-z8", X_.extension_from_normal(SD, SD.generate([_element_of_order(SD, 8)]),
                                                   "Z8", "Z2")),
        ("dic3-over-z6", X_.extension_from_normal(C.dicyclic(3), range(6), "Z6", "Z2")),
        ("z2xs3-over-s3", X_.extension_from_normal(direct_product(C.symmetric(3), Z2),
                                                    range(6), "S3", "Z2")),
        # quotient S3, so conjugate involutions give the same ordering
        ("dic3-over-center", X_.extension_from_normal(C.dicyclic(3), center(C.dicyclic(3)),
                                                       "Z2", "S3")),
        ("z2xs3-over-center", X_.extension_from_normal(
            direct_product(C.symmetric(3), Z2), center(direct_product(C.symmetric(3), Z2)),
            "Z2", "S3")),
        ("s4-over-v4", X_.extension_from_normal(C.symmetric(4), minimal_normal_subgroups(C.symmetric(4))[0],
                                                 "V4", "S3")),
    ]
    for name, L in kernels():
        if L.Q.order > 4 or L.G.order * L.Q.order > 64:
            continue
        h2 = K.enumerate_h2(L)
        for cls in h2:
            out.append(("%s-class%d" % (name, cls.index),
                        X_.cocycle_to_extension(cls.representative, L)))
    return tuple(out)


def _element_of_order(G, k):
    return next(x for x in G if G.element_orders[x] == k)


def _v4_in_a4():
    G = C.alternating(4)
    return tuple(x for x in G if G.element_orders[x] in (1, 2))


def _compatible_spaces(G, Q, form, H, limit=4):
    """Compatible Q-actions on the cosets of H, found by choosing images of the base coset."""
    base = Hm.coset_space(G, Q, [identity_map(G)] * Q.order, H)
    n = base.size
    found = []
    seen = set()
    gens = Q.generators
    for imgs in itertools.product(range(n), repeat=len(gens)):
        qact = [None] * Q.order
        qact[0] = tuple(range(n))
        ok = True
        for gen, y0 in zip(gens, imgs):
            a = base.transporters(0, y0)[0]
            row = []
            for x in range(n):
                g = base.transporters(0, x)[0]
                row.append(base.gact[0][G.mt[a][form[gen][g]]])
            qact[gen] = tuple(row)
        order, done = [0], {0}
        for s in order:
            for gen in gens:
                st = Q.mt[s][gen]
                row = tuple(qact[gen][qact[s][x]] for x in range(n))
                if st not in done:
                    if qact[st] is not None and qact[st] != row:
                        ok = False
                    qact[st] = row
                    done.add(st)
                    order.append(st)
                elif qact[st] != row:
                    ok = False
        if not ok or None in qact or tuple(qact) in seen:
            continue
        try:
            S = Hm.GSpace.make(G, Q, form, base.gact, qact)
        except Exception:
            continue
        seen.add(tuple(qact))
        found.append(S)
        if len(found) >= limit:
            break
    return found


@lru_cache(maxsize=None)
def gspaces():
    """(name, G-space) pairs with |G| <= 12, |Q| <= 4, |X| <= 12."""
    Z2, Z4, V4 = C.cyclic(2), C.cyclic(4), C.klein()
    S3, D4, Q8 = C.symmetric(3), C.dihedral(4), C.quaternion()
    G4 = Z4
    inv4 = (0, 3, 2, 1)
    out = []

    def add(prefix, spaces):
        for i, S in enumerate(spaces):
            out.append(("%s-%d" % (prefix, i), S))

    out.append(("z4-regular-inversion", Hm.regular_space(G4, Z2, [identity_map(G4), inv4])))
    out.append(("s3-point", Hm.point_space(S3, Z2, [identity_map(S3)] * 2)))
    add("z4-mod-z2-trivial-form", _compatible_spaces(G4, Z2, [identity_map(G4)] * 2, (0, 2)))
    add("z4-mod-z2-inversion", _compatible_spaces(G4, Z2, [identity_map(G4), inv4], (0, 2)))
    t = next(x for x in S3 if S3.element_orders[x] == 2)
    add("s3-mod-transposition", _compatible_spaces(S3, Z2, [identity_map(S3)] * 2, (0, t), limit=2))
    add("q8-mod-center", _compatible_spaces(Q8, Z2, [identity_map(Q8)] * 2, (0, 2), limit=3))
    add("q8-mod-center-v4", _compatible_spaces(Q8, V4, [identity_map(Q8)] * 4, (0, 2), limit=3))
    add("d4-mod-center", _compatible_spaces(D4, Z2, [identity_map(D4)] * 2, (0, 2), limit=3))
    refl = D4.generate([4])
    add("d4-mod-reflection", _compatible_spaces(D4, Z2, [identity_map(D4)] * 2, refl, limit=3))
    add("z2xz2-mod-diag", _compatible_spaces(V4, Z2, [identity_map(V4), (0, 2, 1, 3)],
                                             (0, 3), limit=2))
    add("z4-regular-z4", _compatible_spaces(Z4, Z4, [identity_map(Z4)] * 4, (0,), limit=2))
    D5 = C.dihedral(5)
    flip = tuple((-x) % 5 if x < 5 else 5 + (-(x - 5)) % 5 for x in D5)
    add("d5-mod-reflection", _compatible_spaces(D5, Z2, [identity_map(D5), flip],
                                                D5.generate([5]), limit=2))
    Dic3 = C.dicyclic(3)
    add("dic3-mod-center", _compatible_spaces(Dic3, Z2, [identity_map(Dic3)] * 2, (0, 3), limit=2))
    return tuple(out)


@lru_cache(maxsize=None)
def complexes():
    """(name, two-term complex) pairs."""
    Z2, Z3, Z4, V4 = C.cyclic(2), C.cyclic(3), C.cyclic(4), C.klein()
    S3 = C.symmetric(3)

    def mod(Q, M, action=None):
        return coh.QModule(Q, M, action or [identity_map(M)] * Q.order)

    inv4 = [identity_map(Z4), (0, 3, 2, 1)]
    inv3 = [identity_map(Z3), (0, 2, 1)]
    sign = [identity_map(Z3) if S3.element_orders[s] != 2 else (0, 2, 1) for s in S3]
    out = [
        ("z2-z2-zero", coh.ComplexTwoTerm(mod(Z2, Z2), mod(Z2, Z2), (0, 0))),
        ("z2-z2-identity", coh.ComplexTwoTerm.identity(mod(Z2, Z2))),
        ("z2-z4-to-z2", coh.ComplexTwoTerm(mod(Z2, Z4), mod(Z2, Z2), (0, 1, 0, 1))),
        ("z2-z2-into-z4", coh.ComplexTwoTerm(mod(Z2, Z2), mod(Z2, Z4), (0, 2))),
        ("z2-z4-inv-square", coh.ComplexTwoTerm(mod(Z2, Z4, inv4), mod(Z2, Z4, inv4), (0, 2, 0, 2))),
        ("z2-z3-inv-identity", coh.ComplexTwoTerm.identity(mod(Z2, Z3, inv3))),
        ("v4-z2-zero", coh.ComplexTwoTerm(mod(V4, Z2), mod(V4, Z2), (0, 0))),
        ("z3-z3-zero", coh.ComplexTwoTerm(mod(Z3, Z3), mod(Z3, Z3), (0, 0, 0))),
        ("s3-z3-sign-double", coh.ComplexTwoTerm(mod(S3, Z3, sign), mod(S3, Z3, sign), (0, 2, 1))),
        ("z4-z2-zero", coh.ComplexTwoTerm(mod(Z4, Z2), mod(Z4, Z2), (0, 0))),
    ]
    return tuple(out)


def groups():
    return (("trivial", C.trivial()), ("z2", C.cyclic(2)), ("s3", C.symmetric(3)),
            ("d5", C.dihedral(5)), ("q8", C.quaternion()), ("f20", C.frobenius20()))


def cocycles():
    """(name, kernel, cocycle, valid) including one deliberately corrupted cocycle."""
    out = []
    L = inversion_kernel(4)
    h2 = K.enumerate_h2(L)
    for cls in h2:
        out.append(("z2-on-z4-inversion-class%d" % cls.index, L, cls.representative, True))
    c = h2[1].representative
    g = [list(r) for r in c.g]
    g[1][1] = (g[1][1] + 1) % 4
    out.append(("z2-on-z4-inversion-corrupted", L, K.TwoCocycle.make(c.f, g), False))
    L = d5_outer_kernel()
    out.append(("z2-on-d5-remark-class0", L, K.enumerate_h2(L)[0].representative, True))
    return out


def write_corpus(root=CORPUS_DIR, include_invalid=False):
    """Serialize the corpus; the corrupted cocycle is written only when asked for."""
    root = Path(root)
    for sub, items, doc in (("kernels", kernels(), io.kernel_doc),
                            ("extensions", extensions(), io.extension_doc),
                            ("gspaces", gspaces(), io.gspace_doc),
                            ("complexes", complexes(), io.complex_doc)):
        d = root / sub
        d.mkdir(parents=True, exist_ok=True)
        for name, obj in items:
            io.dump(doc(obj), d / ("%s.json" % name))
    d = root / "groups"
    d.mkdir(parents=True, exist_ok=True)
    for name, G in groups():
        io.dump(io.group_doc(G), d / ("%s.json" % name))
    d = root / "cocycles"
    d.mkdir(parents=True, exist_ok=True)
    for name, L, c, valid in cocycles():
        if valid or include_invalid:
            io.dump(io.cocycle_doc(L, c), d / ("%s.json" % name))
    return root
