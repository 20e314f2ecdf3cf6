import random

import pytest

import oracle as O
from hlyforge import (
    GF, QQ, CocyclePair, Complex, DimensionError, PreconditionError, adjoint_hom_lie_rep,
    adjoint_rep, cochain_basis, cocycle_pair, cohomology_dims, g_from_f,
    hom_lie_2cocycles, hom_lie_pair, induced_hly_from_hom_lie,
    verify_23cocycle, verify_2cocycle_hom_lie, zero_rep,
)
from hlyforge.cohomology import coboundary_deg1, delta_squared_check, failed_conditions
from hlyforge.fixtures import aff2q, h3, h3q, sl2, sl2q, zero3


def adjoint_pair(make, field=QQ):
    H = induced_hly_from_hom_lie(make(field))
    return H, adjoint_rep(H)


def test_frozen_dims_h3():
    H, R = adjoint_pair(h3)
    d0 = cohomology_dims(0, H, R)
    d1 = cohomology_dims(1, H, R)
    assert (d0["dimC"], d0["rank_out"], d0["dimZ"], d0["dimB"], d0["dimH"]) == (9, 3, 6, 0, 6)
    assert (d1["dimC"], d1["rank_out"], d1["dimZ"], d1["dimB"], d1["dimH"]) == (36, 9, 27, 3, 24)
    assert d0["delta_squared_zero"]


def test_frozen_dims_sl2():
    H, R = adjoint_pair(sl2)
    assert cohomology_dims(0, H, R)["dimZ"] == 3
    assert cohomology_dims(1, H, R)["dimH"] == 1


def test_zero_algebra_zero_rep():
    H = induced_hly_from_hom_lie(zero3())
    R = zero_rep(H, 1)
    for level in (0, 1):
        d = cohomology_dims(level, H, R)
        assert d["rank_out"] == 0 and d["dimH"] == d["dimC"]


@pytest.mark.parametrize("make", [h3, h3q, sl2, sl2q, aff2q])
def test_level0_coboundary_matches_oracle(make):
    H, R = adjoint_pair(make)
    cx = Complex(H, R)
    basis = cx.space(1).basis
    dI, dII = cx.delta(0, basis, None)
    for k, f in enumerate(basis):
        zero = QQ.is_zero(dI[k]) and QQ.is_zero(dII[k])
        assert zero == O.delta0(O.Num(), H.alpha, H.binary, H.ternary, R.beta, R.rho,
                                R.theta, f.T)


def test_coboundary_of_identity_on_h3():
    H, R = adjoint_pair(h3)
    dI, dII = coboundary_deg1(QQ.eye(3), H, R)
    # rho(x)y - rho(y)x - [x,y] = [x,y]
    assert QQ.equal(dI, H.binary)


@pytest.mark.parametrize("make", [h3, h3q, sl2q])
def test_rank_nullity_and_delta_squared(make):
    H, R = adjoint_pair(make)
    cx = Complex(H, R, cap=7)
    for level in (0, 1):
        d = cx.dims(level)
        assert d["dimZ"] + d["rank_out"] == d["dimC"]
        assert d["dimH"] >= 0
    for start in (0, 1):
        m, zero = cx.delta_squared(start)
        assert zero


def test_images_are_cochains():
    H, R = adjoint_pair(sl2q)
    cx = Complex(H, R, cap=5)
    assert cx.image_report(0).ok and cx.image_report(1).ok


def test_images_satisfy_closed_conditions():
    for make in (h3q, sl2q, sl2):
        H, R = adjoint_pair(make)
        cx = Complex(H, R)
        dI, dII = cx.delta(0, cx.space(1).basis, None)
        for F, G in zip(dI, dII):
            rep = verify_23cocycle(CocyclePair(F, G), H, R)
            assert not rep.failed("pair_closed_binary")
            assert not rep.failed("pair_closed_ternary")


def test_closed_conditions_are_kernel_of_delta():
    H, R = adjoint_pair(sl2q)
    cx = Complex(H, R)
    fs, gs = cx.basis(1)
    rng = random.Random(0)
    for _ in range(20):
        c = QQ.array([rng.randint(-1, 1) for _ in range(len(fs))])
        F, G = QQ.dot(c, fs, ([0], [0])), QQ.dot(c, gs, ([0], [0]))
        eI, eII = cx.delta(1, F[None], G[None])
        rep = verify_23cocycle(CocyclePair(F, G), H, R)
        assert QQ.is_zero(eI) == (not rep.failed("pair_closed_binary"))
        assert QQ.is_zero(eII) == (not rep.failed("pair_closed_ternary"))


def test_cocycle_factory():
    count = 0
    for make in (h3, h3q):
        L = make()
        R = adjoint_hom_lie_rep(L)
        Z = hom_lie_2cocycles(L, R)
        for F in Z:
            assert verify_2cocycle_hom_lie(F, L, R).ok
            H, Rt, pair = hom_lie_pair(F, L, R)
            assert verify_23cocycle(pair, H, Rt).ok
            count += 1
    assert count >= 5


def test_g_from_f_zero_rep():
    # with the zero rep the rho term drops and G(x, y, z) = F([x, y], z)
    from hlyforge import HomLieRep
    L = h3()
    R = HomLieRep(QQ.eye(1), QQ.zeros((3, 1, 1)), QQ)
    F = QQ.zeros((3, 3, 1))
    F[0, 2, 0], F[2, 0, 0] = 1, -1
    assert verify_2cocycle_hom_lie(F, L, R).ok
    G = g_from_f(F, L, R)
    # G(e1, e2, e1) = F(e3, e1) = -1
    assert G[0, 1, 0, 0] == -1 and G[1, 0, 0, 0] == 1
    assert QQ.is_zero(G[:, :, 1:])


def test_g_from_f_rejects():
    L = sl2()
    R = adjoint_hom_lie_rep(L)
    F = QQ.zeros((3, 3, 3))
    F[0, 1, 0], F[1, 0, 0] = 1, -1
    assert not verify_2cocycle_hom_lie(F, L, R).ok
    with pytest.raises(PreconditionError):
        g_from_f(F, L, R)


def test_single_condition_violation():
    H, R = adjoint_pair(h3)
    F = QQ.zeros((3, 3, 3))
    F[0, 2, 0], F[2, 0, 0] = 1, -1
    rep = verify_23cocycle(CocyclePair(F, QQ.zeros((3, 3, 3, 3))), H, R)
    assert failed_conditions(rep) == [1]
    assert rep.failures[0].name == "pair_cyclic_rho"
    G = QQ.zeros((3, 3, 3, 3))
    G[0, 1, 0, 0], G[1, 0, 0, 0] = 1, -1
    rep = verify_23cocycle(CocyclePair(QQ.zeros((3, 3, 3)), G), H, R)
    assert failed_conditions(rep) == [3]


def test_cochain_membership():
    # alpha = beta = diag(1, 2, 2): F(e2, e3) = e1 is not equivariant, F(e1, e2) = e3 is
    H, R = adjoint_pair(h3q)
    sp = cochain_basis(2, H, R)
    good = QQ.zeros((3, 3, 3))
    good[0, 1, 2], good[1, 0, 2] = 1, -1
    assert sp.contains(good).ok
    bad = QQ.zeros((3, 3, 3))
    bad[1, 2, 0], bad[2, 1, 0] = 1, -1
    assert not sp.contains(bad).ok
    with pytest.raises(PreconditionError):
        cocycle_pair(bad, QQ.zeros((3, 3, 3, 3)), H, R)


def test_level_cap():
    H, R = adjoint_pair(h3)
    with pytest.raises(DimensionError):
        Complex(H, R).matrix(2)
    with pytest.raises(DimensionError):
        delta_squared_check(H, R, 1)


def test_gf_dims_consistent():
    H, R = adjoint_pair(sl2, GF(5))
    d = cohomology_dims(1, H, R)
    assert d["dimZ"] + d["rank_out"] == d["dimC"]
    assert cohomology_dims(0, H, R)["delta_squared_zero"]
