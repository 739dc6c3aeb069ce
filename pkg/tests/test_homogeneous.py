import itertools

import pytest

from nonabh2 import catalog as C
from nonabh2 import extensions as X_
from nonabh2 import fixtures as F
from nonabh2 import homogeneous as Hm
from nonabh2 import kernels as K
from nonabh2.errors import NotCompatible, NotTransitive
from nonabh2.groups import identity_map

Z2, Z4, S3 = C.cyclic(2), C.cyclic(4), C.symmetric(3)
INV4 = (0, 3, 2, 1)
SPACES = F.gspaces()


def brute_dominated(S):
    """Some 1-cocycle c and point y0 with s(y0) = y0.c_s for all s."""
    G, Q = S.G, S.Q
    for vals in itertools.product(range(G.order), repeat=Q.order - 1):
        c = (0,) + vals
        if any(c[Q.mt[s][t]] != G.mt[c[s]][S.form[s][c[t]]] for s in Q for t in Q):
            continue
        for y0 in range(S.size):
            if all(S.qact[s][y0] == S.gact[y0][c[s]] for s in Q):
                return True
    return False


def test_regular_space_is_torsor():
    S = Hm.regular_space(Z4, Z2, [identity_map(Z4), INV4])
    assert S.is_torsor()
    L = Hm.stabilizer_kernel(S)
    assert L.G.order == 1
    v = Hm.verify_51(S)
    assert v.neutral and v.dominated and v.splits
    T, phi = Hm.dominated_by_torsor(S)
    assert T.cocycle == (0, 0) and phi == tuple(range(4))
    E = Hm.class_alpha(S)
    assert E.E.order == 2


def test_point_space():
    form = [identity_map(S3)] * 2
    S = Hm.point_space(S3, Z2, form)
    L = Hm.stabilizer_kernel(S)
    assert L.G.order == 6 and all(L.is_inner(a) for a in L.kappa)
    X = Hm.class_alpha(S)
    assert X.E.order == 12 and X_.find_splitting(X) is not None
    T, phi = Hm.dominated_by_torsor(S)
    assert set(phi) == {0}
    assert Hm.verify_51(S).agree


def test_s3_cosets_of_transposition():
    t = next(x for x in S3 if S3.element_orders[x] == 2)
    S = Hm.coset_space(S3, Z2, [identity_map(S3)] * 2, (0, t))
    assert S.size == 3
    L = Hm.stabilizer_kernel(S)
    assert L.G.order == 2 and all(L.is_inner(a) for a in L.kappa)
    X = Hm.class_alpha(S)
    assert sorted(X.E.element_orders) == [1, 2, 2, 2]
    assert X_.find_splitting(X) is not None
    v = Hm.verify_51(S)
    assert v.neutral and v.dominated and v.agree


def test_validation_errors():
    form = [identity_map(Z4)] * 2
    with pytest.raises(NotTransitive):
        Hm.GSpace.make(Z4, Z2, form, [[0, 0, 0, 0], [1, 1, 1, 1]], [[0, 1], [0, 1]])
    with pytest.raises(NotCompatible):
        Hm.GSpace.make(Z4, Z2, [identity_map(Z4), INV4], [list(r) for r in Z4.mt],
                       [[0, 1, 2, 3], [0, 1, 2, 3]])


def test_one_cocycles_against_brute_force():
    for G, form in ((Z4, [identity_map(Z4), INV4]), (S3, [identity_map(S3)] * 2),
                    (Z4, [identity_map(Z4)] * 2)):
        brute = sorted((0, x) for x in G if G.mt[x][form[1][x]] == 0)
        assert Hm.one_cocycles(G, Z2, form) == brute


@pytest.mark.parametrize("name, S", SPACES, ids=[n for n, _ in SPACES])
def test_verify51_and_choices(name, S):
    v = Hm.verify_51(S)
    assert v.agree
    assert v.dominated == brute_dominated(S)
    L, c, _, inc = Hm.stabilizer_data(S, 0)
    for seed in range(3):
        _, c2, _, _ = Hm.stabilizer_data(S, 0, seed=seed)
        assert K.cocycles_equivalent(c, c2, L) is not None
    for x in range(S.size):
        assert Hm.transport_kernel(S, 0, x)
    # the class extension sits inside G x| Q
    X = Hm.class_alpha(S)
    assert X.E.order == len(inc) * S.Q.order
    assert [X.G.order, X.Q.order] == [len(inc), S.Q.order]


def test_corpus_mix():
    flags = [Hm.verify_51(S).neutral for _, S in SPACES]
    assert len(SPACES) >= 10 and any(flags) and not all(flags)
    assert all(S.G.order <= 12 and S.Q.order <= 4 and S.size <= 12 for _, S in SPACES)
