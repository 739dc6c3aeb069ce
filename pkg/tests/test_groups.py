import itertools

import pytest

import oracles as O
from nonabh2 import catalog as C
from nonabh2 import groups as Gp
from nonabh2.errors import NoIdentity, NoInverse, NotAssociative, NotNormal, SizeLimitExceeded
from nonabh2 import limits


def test_build_trivial_and_z2():
    T = Gp.build_group([[0]])
    assert T.order == 1 and tuple(T.inverse) == (0,)
    Z2 = Gp.build_group([[0, 1], [1, 0]])
    assert Z2.order == 2 and Z2.inv(1) == 1


def test_build_moves_identity_to_zero():
    # Z/3 with the identity stored at index 2
    t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = Gp.build_group(t, labels=["a", "b", "e"])
    assert G.label(0) == "e"
    assert all(G.mul(0, x) == x for x in G)


def test_build_errors_name_the_offender():
    with pytest.raises(NoIdentity):
        Gp.build_group([[1, 1], [1, 1]])
    with pytest.raises(NoInverse) as exc:
        Gp.build_group([[0, 1, 2], [1, 1, 1], [2, 1, 2]])
    assert "element" in str(exc.value)
    # a loop of order 5 that is not a group (Latin square, not associative)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as exc:
        Gp.build_group(loop)
    x, y, z = exc.value.triple
    mt = loop
    assert mt[mt[x][y]][z] != mt[x][mt[y][z]]


def test_frobenius20_matches_affine_permutations():
    F = C.frobenius20()
    assert F.order == 20
    perms = O.perm_closure([tuple((2 * x) % 5 for x in range(5)), tuple((x + 1) % 5 for x in range(5))])
    assert len(perms) == 20
    H, _ = Gp.from_permutations(5, [tuple((2 * x) % 5 for x in range(5)),
                                     tuple((x + 1) % 5 for x in range(5))])
    assert O.is_isomorphic_census(F, H)
    assert Gp.find_isomorphism(F, H) is not None


@pytest.mark.parametrize("G, aut, inn, out", [
    (C.cyclic(2), 1, 1, 1),
    (C.symmetric(3), 6, 6, 1),
    (C.dihedral(5), 20, 10, 2),
    (C.quaternion(), 24, 4, 6),
    (C.klein(), 6, 1, 6),
])
def test_aut_inn_out(G, aut, inn, out):
    od = Gp.inner_automorphisms(G)
    assert len(od.automorphisms) == aut == len(O.automorphisms(G))
    assert od.inner_order == inn
    assert od.out_order == out


def test_abelian_out_equals_aut():
    G = C.abelian(2, 4)
    od = Gp.inner_automorphisms(G)
    assert od.inner_order == 1 and od.out_order == len(od.automorphisms)


def test_center_examples():
    assert len(Gp.center(C.quaternion())) == 2
    assert Gp.center(C.dihedral(5)) == (0,)
    G = C.abelian(2, 2)
    assert Gp.center(G) == tuple(G)
    for G in (C.quaternion(), C.dihedral(4), C.symmetric(3)):
        assert list(Gp.center(G)) == O.center(G)


def test_involutions_examples():
    assert Gp.involutions(C.cyclic(2)) == (1,)
    assert Gp.involutions(C.cyclic(3)) == ()
    F = C.frobenius20()
    inv = Gp.involutions(F)
    assert list(inv) == O.involutions(F)
    assert len(inv) == 5 and all(x < 10 for x in inv)


def test_conjugacy_class_examples():
    assert sorted(len(c) for c in Gp.conjugacy_classes(C.symmetric(3))) == [1, 2, 3]
    D5 = C.dihedral(5)
    assert (5, 6, 7, 8, 9) in Gp.conjugacy_classes(D5)
    A = C.abelian(2, 2)
    assert all(len(c) == 1 for c in Gp.conjugacy_classes(A))
    for G in (D5, C.quaternion(), C.alternating(4)):
        assert sorted(len(c) for c in Gp.conjugacy_classes(G)) == O.class_sizes(G)


def test_quotient_examples():
    F = C.frobenius20()
    Q, proj = Gp.quotient(F, range(10))
    assert Q.order == 2 and proj.kernel() == tuple(range(10))
    T, _ = Gp.quotient(F, range(20))
    assert T.order == 1
    same, p = Gp.quotient(F, (0,))
    assert same.order == 20 and p.is_injective()
    with pytest.raises(NotNormal):
        Gp.quotient(C.symmetric(3), (0, Gp.involutions(C.symmetric(3))[0]))


def test_outer_class_equality():
    G = C.dihedral(5)
    od = Gp.inner_automorphisms(G)
    tau = od.automorphisms[od.out_representatives[1]]
    twisted = Gp.compose(Gp.inner(G, 3), tau)
    assert Gp.OuterClass(G, tau) == Gp.OuterClass(G, twisted)
    assert hash(Gp.OuterClass(G, tau)) == hash(Gp.OuterClass(G, twisted))
    assert Gp.OuterClass(G, tau) != Gp.OuterClass(G, Gp.identity_map(G))


def test_automorphism_search_cap():
    with limits.using(max_aut_candidates=10):
        with pytest.raises(SizeLimitExceeded):
            Gp.automorphism_group(C.dihedral(5))


def test_semidirect_and_direct_products():
    Z3, Z2 = C.cyclic(3), C.cyclic(2)
    S = Gp.semidirect_product(Z3, Z2, [(0, 1, 2), (0, 2, 1)])
    assert not S.is_abelian and S.order == 6
    assert Gp.find_isomorphism(S, C.symmetric(3)) is not None
    P = Gp.direct_product(Z3, Z2)
    assert P.is_abelian and Gp.find_isomorphism(P, C.cyclic(6)) is not None


CORPUS_GROUPS = [C.trivial(), C.cyclic(2), C.cyclic(4), C.klein(), C.symmetric(3), C.dihedral(4),
                 C.quaternion(), C.dihedral(5), C.dicyclic(3), C.alternating(4), C.frobenius20(),
                 C.dihedral(8), C.semidihedral(8)]


@pytest.mark.parametrize("G", CORPUS_GROUPS, ids=lambda G: G.name)
def test_group_invariants(G):
    od = Gp.inner_automorphisms(G)
    assert od.inner_order * len(Gp.center(G)) == G.order
    auts = set(od.automorphisms)
    assert Gp.identity_map(G) in auts
    assert all(Gp.inner(G, x) in auts for x in G)
    assert all(Gp.compose(a, b) in auts for a, b in itertools.islice(itertools.product(auts, auts), 400))
    inv = set(Gp.involutions(G))
    for a in od.automorphisms:
        assert {a[x] for x in inv} == inv


@pytest.mark.parametrize("G", CORPUS_GROUPS[1:], ids=lambda G: G.name)
def test_quotient_by_center_projection(G):
    Z = Gp.center(G)
    Q, proj = Gp.quotient(G, Z)
    proj.check()
    assert proj.is_surjective()
    assert proj.kernel() == Z
