"""Distribution modules: actions, canonical modules, simple quotients."""

import random

import pytest

from hopfgalois.catalog import (Cherednik, OreFamily, QuantumBorel,
                                RationalDifferential, ShiftFlag, build_setting,
                                ore_generator)
from hopfgalois.hcmod import (DistributionVector, cyclic_closure_dims,
                              cyclic_module, distribution_action,
                              invariant_coordinate_subspaces,
                              local_finiteness_check, scalar_module_check,
                              simple_quotient)
from hopfgalois.polyring import RatFunc
from hopfgalois.stabilizer import PointIdeal
from hopfgalois.verify import COUNTEREXAMPLE, VERIFIED, OrderPresentation


def weyl_presentation():
    S = build_setting(OreFamily((1,)))
    return OrderPresentation(S, [("t", S.from_ratfunc(S.ring.var(0))),
                                 ("d", S.inf_element(0))])


def delta(S, k):
    return DistributionVector.derivative_delta(
        S.ring, (S.ring.params.zero,), (k,))


# -- single-operator actions, against the functional-evaluation oracle ---------


def test_weyl_delta_ladder():
    pres = weyl_presentation()
    S = pres.setting
    t = pres.generators[0][1]
    d = pres.generators[1][1]
    for k in range(4):
        dk = delta(S, k)
        td, leak = distribution_action(t, dk, 6)
        assert not leak
        expect = delta(S, k - 1).scale(S.ring.params.from_fraction(k)) if k \
            else DistributionVector(S.ring, [])
        assert td == expect
        dd, _ = distribution_action(d, dk, 6)
        assert dd == delta(S, k + 1)


def test_action_matches_pairing_oracle():
    # (X xi)(f) = xi(X(f)) checked by direct evaluation on monomials
    pres = weyl_presentation()
    S = pres.setting
    rng = random.Random(31)
    ops = [g for _, g in pres.generators]
    for _ in range(30):
        X = rng.choice(ops) * rng.choice(ops)
        k = rng.randint(0, 3)
        xi = delta(S, k)
        Xxi, leak = distribution_action(X, xi, 10)
        for j in range(6):
            f = RatFunc.of(S.ring.monomial((j,)))
            assert Xxi.evaluate(f) == xi.evaluate(X.apply(f))


def test_lattice_elements_act_by_weights_on_characters():
    S = build_setting(ShiftFlag(2, "S2"))
    pf = S.ring.params
    coords = (pf.from_fraction(2), pf.from_fraction(5))
    lam = DistributionVector.evaluation(S.ring, coords)
    a = S.from_ratfunc(S.ring.var(0) * S.ring.var(1) + S.ring.var(0))
    out, _ = distribution_action(a, lam, 3)
    assert out == lam.scale(pf.from_fraction(12))


def test_grouplike_transport():
    S = build_setting(RationalDifferential(2, "S2"))
    pf = S.ring.params
    xi = DistributionVector.derivative_delta(
        S.ring, (pf.from_fraction(1), pf.from_fraction(2)), (1, 0))
    out, _ = distribution_action(S.group_element(1), xi, 4)
    assert len(out.entries) == 1
    coords, tab = out.entries[0]
    assert [str(c) for c in coords] == ["2", "1"]
    assert list(tab) == [(0, 1)]


def test_twisted_generator_not_transportable():
    S = build_setting(QuantumBorel())
    xi = DistributionVector.evaluation(S.ring, (S.ring.params.one,))
    with pytest.raises(NotImplementedError):
        distribution_action(S.inf_by_name("E"), xi, 2)


def test_module_axiom_opposite_composition():
    # action(XY, xi) = action(Y, action(X, xi)) wherever jets have headroom
    pres = weyl_presentation()
    S = pres.setting
    rng = random.Random(13)
    ops = [g for _, g in pres.generators]
    N = 12
    for _ in range(40):
        X, Y = rng.choice(ops), rng.choice(ops)
        xi = delta(S, rng.randint(0, 2))
        lhs, _ = distribution_action(X * Y, xi, N)
        mid, _ = distribution_action(X, xi, N)
        rhs, _ = distribution_action(Y, mid, N)
        assert lhs == rhs


# -- canonical modules --------------------------------------------------------------


def test_weyl_canonical_module():
    pres = weyl_presentation()
    S = pres.setting
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, jet_order=3, word_length=3)
    assert M.dim == 4
    assert M.basis_labels() == ["delta[(0);[0]]", "delta[(0);[1]]",
                                "delta[(0);[2]]", "delta[(0);[3]]"]
    assert M.point_block_dims() == [4]
    assert len(M.ordinary_weight_space(lam)) == 1
    # the derivative matrix leaks at the truncation edge, the t matrix does not
    assert M.leaks["d"] and not M.leaks["t"]
    # matrices in the jet basis e_k = delta^(k)/k!: t shifts down with
    # weight 1, d raises with weight k+1 (the classical delta rules
    # t delta^(k) = k delta^(k-1), d delta^(k) = delta^(k+1) in disguise)
    t = M.matrices["t"]
    d = M.matrices["d"]
    one = S.ring.params.one
    for k in range(3):
        assert d[k + 1][k] == (k + 1) * one
        assert t[k][k + 1] == one


def test_weyl_simple_quotient_is_whole_module():
    pres = weyl_presentation()
    S = pres.setting
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    Q = simple_quotient(M, lam)
    assert Q.dim == M.dim
    # exhaustive invariant-coordinate-subspace search finds nothing proper
    assert invariant_coordinate_subspaces(list(M.matrices.values()), M.dim) == []
    assert cyclic_closure_dims(list(M.matrices.values()), M.dim,
                               S.ring.params) == [4, 4, 4, 4]


def test_tsquared_module_at_zero():
    S = build_setting(OreFamily((0, 0, 1)))
    pres = OrderPresentation(S, [("t", S.from_ratfunc(S.ring.var(0))),
                                 ("X", ore_generator(S))])
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    assert M.dim == 1
    Q = simple_quotient(M, lam)
    assert Q.dim == 1
    # brute force over coordinate subspaces agrees: nothing proper and nonzero
    assert invariant_coordinate_subspaces(list(M.matrices.values()), M.dim) == []


def test_ore_tsquared_generic_point_behaves_like_weyl():
    S = build_setting(OreFamily((0, 0, 1)))
    pres = OrderPresentation(S, [("t", S.from_ratfunc(S.ring.var(0))),
                                 ("X", ore_generator(S))])
    lam = PointIdeal(S.ring, (1,))
    M = cyclic_module(pres, lam, 2, 2)
    assert M.dim == 3  # X acts as an honest derivative scaled by p(1) = 1
    assert len(M.ordinary_weight_space(lam)) == 1


def test_lattice_only_module_is_the_character_line():
    S = build_setting(OreFamily((1,)))
    pres = OrderPresentation(S, [("t", S.from_ratfunc(S.ring.var(0)))])
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    assert M.dim == 1
    assert simple_quotient(M, lam).dim == 1


def test_shift_module_weight_transport_blocks():
    S = build_setting(ShiftFlag(1, "trivial"))
    pres = OrderPresentation(
        S, [("t", S.from_ratfunc(S.ring.var(0))),
            ("tau", S.group_element(0, (1,))),
            ("tau-inv", S.group_element(0, (-1,)))])
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 1, 2, orbit_window=8)
    # the orbit spreads over shifted points (0, +-1, +-2), one jet line each
    assert len(M.points) == 5
    assert M.point_block_dims() == [1, 1, 1, 1, 1]


def test_orbit_window_escape_raises():
    S = build_setting(ShiftFlag(1, "trivial"))
    pres = OrderPresentation(S, [("tau", S.group_element(0, (1,)))])
    lam = PointIdeal(S.ring, (0,))
    with pytest.raises(ValueError):
        cyclic_module(pres, lam, 1, 5, orbit_window=2)


# -- scalar modules and local finiteness -----------------------------------------------


def test_scalar_module_family():
    S = build_setting(OreFamily((0, 0, 1)))
    p = S.meta["p"]
    for mu in range(20):
        assert scalar_module_check(p, 0, mu).status == VERIFIED
    assert scalar_module_check(p, 1, 0).status == COUNTEREXAMPLE
    W = build_setting(OreFamily((1,)))
    assert scalar_module_check(W.meta["p"], 0, 5).status == COUNTEREXAMPLE


def test_local_finiteness_weyl():
    pres = weyl_presentation()
    S = pres.setting
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    rep = local_finiteness_check(M, pres, 1, lam)
    assert rep.status == VERIFIED
    assert rep.witness["weight-space-dim"] == 4
    assert "d" in rep.witness["low-degree-generators"]


def test_local_finiteness_group_only():
    S = build_setting(ShiftFlag(1, "trivial"))
    pres = OrderPresentation(
        S, [("t", S.from_ratfunc(S.ring.var(0))),
            ("tau", S.group_element(0, (1,))),
            ("tau-inv", S.group_element(0, (-1,)))])
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 1, 2, orbit_window=8)
    rep = local_finiteness_check(M, pres, 0, lam)
    assert rep.status == VERIFIED


def test_local_finiteness_no_weight_vector():
    pres = weyl_presentation()
    S = pres.setting
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    other = PointIdeal(S.ring, (5,))
    rep = local_finiteness_check(M, pres, 1, other)
    assert rep.status == COUNTEREXAMPLE
    assert rep.witness["reason"] == "no weight vector at the point"


def test_truncated_relations_fail_only_at_the_leaky_edge():
    # matrices act for the opposite algebra, so dt - td = 1 on elements
    # becomes [A_d, A_t] = -I; it holds except in the last jet column,
    # which is exactly where the flagged truncation dropped delta^(4)
    pres = weyl_presentation()
    S = pres.setting
    lam = PointIdeal(S.ring, (0,))
    M = cyclic_module(pres, lam, 3, 3)
    Ad, At = M.matrices["d"], M.matrices["t"]
    params = S.ring.params
    d = M.dim
    comm = [[sum((Ad[i][k] * At[k][j] - At[i][k] * Ad[k][j] for k in range(d)),
                 start=params.zero) for j in range(d)] for i in range(d)]
    minus_one = params.from_fraction(-1)
    for i in range(d):
        for j in range(d - 1):
            expected = minus_one if i == j else params.zero
            assert comm[i][j] == expected
    assert M.leaks["d"]
    # the edge column indeed deviates
    assert any(not (comm[i][d - 1] - (minus_one if i == d - 1 else params.zero))
               .is_zero() for i in range(d))
