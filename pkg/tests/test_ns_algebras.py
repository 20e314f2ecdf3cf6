import random

import pytest

import oracle as O
from contexts import F2, gf2_contexts
from generators import random_multiplicative_hom_lie
from hlyforge import (
    GF, QQ, PreconditionError, adjacent_hom_lie, adjoint_hom_lie_rep, context, derived_brackets,
    hly, hom_lie_2cocycles, hom_lie_pair, induced_hly_from_hom_lie, ns_from_reynolds,
    ns_from_twisted_op, ns_hly, ns_hly_from_ns_lie, ns_hom_lie, ns_lie_from_twisted_op_hom_lie,
    search_twisted_ops, subadjacent_hly, v_structure, verify_hly, verify_hly_rep,
    verify_hom_lie, verify_ns_hly, verify_ns_hom_lie, verify_weighted_reynolds,
)
from hlyforge.fixtures import aff2, aff2q, h3, pre_lie_circ
from hlyforge.ns_algebras import LITERAL_READINGS, compare_with_adjacent
from hlyforge.operators import all_matrices


def gf_contexts(p):
    f = GF(p)
    out = []
    for L in (aff2(f), aff2q(f)):
        R = adjoint_hom_lie_rep(L)
        for F in list(hom_lie_2cocycles(L, R))[:2]:
            H, Rt, pair = hom_lie_pair(F, L, R)
            out.append(context(H, Rt, pair.F, pair.G))
    return out


def test_twisted_ops_give_ns_hly_gf2():
    for ctx in gf2_contexts().values():
        for T in search_twisted_ops(ctx):
            N = ns_from_twisted_op(T, ctx)
            circ, vee, curly, square = O.ns_from_top(O.Num(2), ctx, T)
            for got, want in ((N.circ, circ), (N.vee, vee), (N.curly, curly), (N.square, square)):
                assert F2.equal(got, F2.array(want))
            assert verify_ns_hly(N).ok
            S, R = subadjacent_hly(N)
            V = v_structure(T, ctx)
            assert F2.equal(S.binary, V.binary) and F2.equal(S.ternary, V.ternary)
            assert verify_hly_rep(S, R).ok


@pytest.mark.parametrize("p", [3, 5])
def test_twisted_ops_give_ns_hly_gf(p):
    literal_fail = 0
    total = 0
    for ctx in gf_contexts(p):
        for T in search_twisted_ops(ctx):
            N = ns_from_twisted_op(T, ctx)
            assert verify_ns_hly(N).ok
            literal_fail += not verify_ns_hly(N, strict=True).ok
            total += 1
    assert total > 0 and literal_fail > 0


def test_literal_readings_fail_on_closed_ternary():
    ctx = gf_contexts(3)[0]
    failed = set()
    for T in search_twisted_ops(ctx):
        failed.update(verify_ns_hly(ns_from_twisted_op(T, ctx), readings=LITERAL_READINGS).failed())
    assert "ns_closed_ternary" in failed


@pytest.mark.parametrize("p", [3, 5])
def test_reynolds_ns(p):
    f = GF(p)
    H = induced_hly_from_hom_lie(aff2(f))
    literal_failed = set()
    for lam, mu in ((1, 1), (1, 2), (2, 1)):
        for R in all_matrices(2, 2, f):
            if not verify_weighted_reynolds(R, lam, mu, H).ok:
                continue
            assert verify_ns_hly(ns_from_reynolds(R, lam, mu, H)).ok
            literal_failed.update(
                verify_ns_hly(ns_from_reynolds(R, lam, mu, H, literal=True)).failed())
    assert literal_failed == {"ns_curly_bracket_first", "ns_hat_circ"}


def test_derived_brackets_of_zero_products():
    f = GF(3)
    H = induced_hly_from_hom_lie(aff2q(f))
    z2, z3 = f.zeros((2, 2, 2)), f.zeros((2, 2, 2, 2))
    N = ns_hly(H.alpha, z2, H.binary, z3, H.ternary, f)
    star, hat, dbl = derived_brackets(N)
    assert f.equal(star, H.binary) and f.equal(dbl, H.ternary) and f.is_zero(hat)


def reduction_instances(count=20, seed=7):
    """Half valid HLY data from random multiplicative Hom-Lie algebras, half perturbed copies."""
    f = GF(3)
    rng = random.Random(seed)
    out = []
    for L in random_multiplicative_hom_lie(count // 2, p=3, seed=seed):
        H = induced_hly_from_hom_lie(L)
        out.append((H.alpha, H.binary, H.ternary))
        t = H.ternary.copy()
        n = L.dim
        i, j, k, m = (rng.randrange(n) for _ in range(4))
        if i == j:
            j = (i + 1) % n
        t[i, j, k, m] = (t[i, j, k, m] + 1) % 3
        t[j, i, k, m] = (t[j, i, k, m] - 1) % 3
        b = H.binary.copy()
        if rng.random() < 0.5:
            b[0, 1, m] = (b[0, 1, m] + 1) % 3
            b[1, 0, m] = (b[1, 0, m] - 1) % 3
        out.append((H.alpha, b, t))
    return f, out


def test_reduction_to_hly():
    f, cases = reduction_instances()
    seen = set()
    for alpha, b, t in cases:
        n = alpha.shape[0]
        N = ns_hly(alpha, f.zeros((n, n, n)), b, f.zeros((n, n, n, n)), t, f)
        a = verify_ns_hly(N).ok
        assert a == verify_hly(hly(alpha, b, t, f)).ok
        seen.add(a)
    assert seen == {True, False}


def test_pre_lie_fixture():
    N = ns_hom_lie(QQ.eye(2), pre_lie_circ(), QQ.zeros((2, 2, 2)))
    assert verify_ns_hom_lie(N).ok
    M = ns_hly_from_ns_lie(N)
    assert verify_ns_hly(M).ok
    assert verify_hom_lie(adjacent_hom_lie(N)).ok
    assert compare_with_adjacent(N) == {"equals_bracket_of_bracket_twisted": True,
                                        "equals_bracket_of_bracket": True}


def test_pure_vee_is_hom_lie():
    L = h3()
    N = ns_hom_lie(L.alpha, QQ.zeros((3, 3, 3)), L.bracket)
    assert verify_ns_hom_lie(N).ok
    assert verify_ns_hly(ns_hly_from_ns_lie(N)).ok


@pytest.mark.parametrize("p", [3, 5])
def test_ns_lie_from_hom_lie_operators(p):
    f = GF(p)
    strict_fail = 0
    for L in (aff2(f), aff2q(f)):
        R = adjoint_hom_lie_rep(L)
        for F in list(hom_lie_2cocycles(L, R))[:2]:
            H, Rt, pair = hom_lie_pair(F, L, R)
            ctx = context(H, Rt, pair.F, pair.G)
            for T in search_twisted_ops(ctx):
                N = ns_lie_from_twisted_op_hom_lie(T, L, R, F)
                assert verify_ns_hom_lie(N).ok
                assert verify_ns_hly(ns_hly_from_ns_lie(N)).ok
                assert verify_hom_lie(adjacent_hom_lie(N)).ok
                strict_fail += not verify_ns_hom_lie(N, strict=True).ok
    assert strict_fail > 0


def test_rejects_non_ns():
    f = GF(3)
    H = induced_hly_from_hom_lie(aff2q(f))
    curly = f.zeros((2, 2, 2, 2))
    curly[0, 0, 1, 1] = 1
    N = ns_hly(H.alpha, f.zeros((2, 2, 2)), H.binary, curly, H.ternary, f)
    assert not verify_ns_hly(N).ok
    with pytest.raises(PreconditionError):
        subadjacent_hly(N)
    c = f.zeros((2, 2, 2))
    c[0, 1, 0] = 1
    bad = ns_hom_lie(f.eye(2), f.zeros((2, 2, 2)), c)
    assert verify_ns_hom_lie(bad).failed("skew_vee")
