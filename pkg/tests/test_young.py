import math

import numpy as np
import pytest

from qha.young import (
    AppendixBReport,
    ExpMinusOneMinusT,
    ExpYoung,
    IndicatorYoung,
    MultiYoungCondition,
    PowerYoung,
    QuasiYoungFunction,
    TabulatedYoung,
    TriYoungCondition,
    appendix_b_checks,
    conjugate,
    delta2_constant,
    format_young,
    inverse,
    lebesgue_constants,
    parse_young,
    phi_for_exponent,
    verify_multilinear_condition,
    verify_tri_condition,
)

P1, P2 = PowerYoung(1), PowerYoung(2)
PINF = IndicatorYoung()
EXP = ExpYoung()
EXP1 = ExpMinusOneMinusT()
ALL_KINDS = [P1, PowerYoung(1.5), P2, PowerYoung(4), PINF, EXP, EXP1]


def test_eval_examples():
    assert P2.evaluate(3.0) == 9.0
    assert PINF.evaluate(0.5) == 0.0
    assert PINF.evaluate(2.0) == math.inf
    assert EXP.evaluate(1.0) == pytest.approx(math.e - 1.0, rel=1e-12)


def test_eval_negative_rejected():
    with pytest.raises(ValueError):
        P2.evaluate(-0.1)


@pytest.mark.parametrize("phi", ALL_KINDS)
def test_young_axioms(phi):
    assert phi.evaluate(0.0) == 0.0
    assert phi.evaluate(math.inf) == math.inf
    grid = np.geomspace(1e-6, 50.0, 80)
    vals = np.asarray(phi.evaluate(grid))
    finite = np.isfinite(vals)
    assert np.all(np.diff(vals[finite]) >= -1e-12)
    # convexity at interior thetas, with inf absorbing
    for theta in (0.25, 0.5, 0.75):
        s, t = grid[:-1], grid[1:]
        lhs = np.asarray(phi.evaluate(theta * s + (1 - theta) * t))
        rhs = theta * np.asarray(phi.evaluate(s)) + (1 - theta) * np.asarray(phi.evaluate(t))
        ok = np.isinf(rhs) | (lhs <= rhs * (1 + 1e-12) + 1e-12)
        assert np.all(ok)


def test_tabulated_kind():
    tab = TabulatedYoung(ts=(1.0, 2.0, 3.0), vs=(1.0, 4.0, 9.0))
    assert tab.evaluate(0.0) == 0.0
    assert tab.evaluate(2.0) == 4.0
    assert tab.evaluate(2.5) == pytest.approx(6.5)  # chord of (2,4)-(3,9)
    assert tab.evaluate(4.0) == pytest.approx(14.0)  # final slope 5 continues
    with pytest.raises(ValueError):
        TabulatedYoung(ts=(1.0, 2.0), vs=(4.0, 1.0))


def test_conjugate_analytic_rules():
    assert conjugate(P2) == P2
    assert conjugate(PowerYoung(4)) == PowerYoung(4.0 / 3.0)
    assert conjugate(P1) == PINF
    assert conjugate(PINF) == P1


def test_conjugate_involution_power():
    phi = PowerYoung(3)
    back = conjugate(conjugate(phi))
    t = np.geomspace(1e-4, 1e3, 40)
    assert np.max(np.abs(back.evaluate(t) - phi.evaluate(t))) <= 1e-10 * np.max(phi.evaluate(t))


def test_conjugate_exp1_numeric_vs_closed_form():
    # closed-form oracle: sup_s(s t - e^s + 1 + s) = (1+t) log(1+t) - t
    conj = conjugate(EXP1)
    for t in (0.5, 1.0, 2.0):
        exact = (1 + t) * math.log(1 + t) - t
        assert conj.evaluate(t) == pytest.approx(exact, rel=1e-8)


def test_conjugate_quasi_unsupported():
    with pytest.raises(ValueError):
        conjugate(QuasiYoungFunction(base=P2, order_r=0.5))


@pytest.mark.parametrize("phi", [P1, P2, PowerYoung(1.5), EXP, EXP1])
def test_youngs_inequality(phi):
    conj = conjugate(phi)
    s = np.geomspace(1e-3, 20.0, 25)
    t = np.geomspace(1e-3, 20.0, 25)
    prod = np.outer(s, t)
    rhs = np.asarray(phi.evaluate(s))[:, None] + np.asarray(conj.evaluate(t))[None, :]
    ok = np.isinf(rhs) | (prod <= rhs + 1e-12 * np.maximum(rhs, 1.0))
    assert np.all(ok)


def test_inverse_examples():
    for p in (1.0, 1.5, 2.0, 4.0):
        assert inverse(PowerYoung(p), 1.0) == pytest.approx(1.0)
    assert inverse(PINF, 1.0) == 1.0
    assert inverse(P2, 4.0) == pytest.approx(2.0)
    assert inverse(EXP, 1.0) == pytest.approx(math.log(2.0))
    assert inverse(P2, 0.0) == 0.0


def test_inverse_indicator_matches_bisection_oracle():
    # independent oracle: plain bisection on the gauge evaluator
    def bisect(phi, s):
        lo, hi = 0.0, 1.0
        while float(phi.evaluate(hi)) < s:
            hi *= 2
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if float(phi.evaluate(mid)) >= s:
                hi = mid
            else:
                lo = mid
        return hi

    assert inverse(PINF, 1.0) == pytest.approx(bisect(PINF, 1.0), rel=1e-10)
    assert inverse(EXP1, 3.0) == pytest.approx(bisect(EXP1, 3.0), rel=1e-10)


@pytest.mark.parametrize("phi", [P2, EXP, EXP1])
def test_inverse_right_quasi_inverse(phi):
    for s in (0.3, 1.0, 7.0):
        t = inverse(phi, s)
        assert float(phi.evaluate(t)) <= s * (1 + 1e-9)
        assert float(phi.evaluate(t * (1 + 1e-10))) >= s * (1 - 1e-9)


def test_inverse_quasi_order_composition():
    base = EXP
    for r in (0.5, 2.0 / 3.0):
        quasi = QuasiYoungFunction(base=base, order_r=r)
        for s in (0.2, 1.0, 5.0):
            assert inverse(quasi, s) == pytest.approx(inverse(base, s) ** (1.0 / r), rel=1e-10)


def test_delta2():
    assert delta2_constant(P2, 3.0) == pytest.approx(4.0, rel=1e-12)
    assert delta2_constant(PowerYoung(1.5), 1.0) == pytest.approx(2.0**1.5, rel=1e-12)
    assert delta2_constant(PINF, 1.0) is None
    # grid-sup oracle: the exp ratio increases, so the sup sits at t = T
    val = delta2_constant(EXP, 1.0)
    grid = np.geomspace(1e-8, 1.0, 2048)
    oracle = float(np.max(np.expm1(2 * grid) / np.expm1(grid)))
    assert val == pytest.approx(oracle, rel=1e-12)
    assert val == pytest.approx((math.e**2 - 1) / (math.e - 1), rel=1e-6)


def test_tri_condition_amgm_triple():
    rep = verify_tri_condition(PINF, P2, P2, TriYoungCondition(0.0, 0.5, 0.5, T=10.0), probes=24)
    assert rep.passed


def test_tri_condition_l1_triple_window():
    cond1 = TriYoungCondition(1.0, 0.0, 0.0, T=1.0)
    assert verify_tri_condition(P1, P1, P1, cond1, probes=24).passed
    rep = verify_tri_condition(P1, P1, P1, TriYoungCondition(1.0, 0.0, 0.0, T=2.0), probes=24)
    assert not rep.passed
    assert rep.witness[0] == pytest.approx(2.0)


def test_tri_condition_probe_floor():
    with pytest.raises(ValueError):
        verify_tri_condition(P1, P1, P1, TriYoungCondition(1, 0, 0, T=1.0), probes=8)


def test_lebesgue_constants_values():
    c = lebesgue_constants(1, 1, 1)
    assert (c.c0, c.c1, c.c2) == (1.0, 0.0, 0.0)
    c = lebesgue_constants(math.inf, 2, 2)
    assert (c.c0, c.c1, c.c2) == (0.0, 0.5, 0.5)
    # the coefficient of each two-factor product is indexed by the omitted
    # exponent: c1 = 1/p2', c2 = 1/p1'
    c = lebesgue_constants(2, 2, 1)
    assert (c.c0, c.c1, c.c2) == (0.5, 0.0, 0.5)


def test_lebesgue_constants_young_relation_guard():
    with pytest.raises(ValueError):
        lebesgue_constants(2, 2, 2)


@pytest.mark.parametrize(
    "triple",
    [(1, 1, 1), (math.inf, 2, 2), (2, 2, 1), (2, 1.5, 1.2), (3, 1.5, 1.5), (1.5, 1.5, 1)],
)
def test_lebesgue_constants_always_pass(triple):
    cond = lebesgue_constants(*triple)
    phis = [phi_for_exponent(p) for p in triple]
    assert verify_tri_condition(*phis, cond=cond, probes=20).passed


def test_multilinear_reduces_to_tri_for_symmetric_constants():
    cond3 = MultiYoungCondition(c=(0.0, 0.5, 0.5), T=10.0, N=2)
    rep3 = verify_multilinear_condition([PINF, P2, P2], cond3, probes=12)
    rep_t = verify_tri_condition(PINF, P2, P2, TriYoungCondition(0.0, 0.5, 0.5, T=10.0), probes=24)
    assert rep3.passed == rep_t.passed


def test_multilinear_n3():
    # all phi_j = t at T = 1 passes with unit constants
    cond = MultiYoungCondition(c=(1.0, 1.0, 1.0, 1.0), T=1.0, N=3)
    assert verify_multilinear_condition([P1, P1, P1, P1], cond, probes=10).passed
    # all indicators makes every Omega_j product vanish on [0, 1]: no bound
    cond0 = MultiYoungCondition(c=(1.0, 1.0, 1.0, 1.0), T=1.0, N=3)
    assert not verify_multilinear_condition([PINF, PINF, PINF, PINF], cond0, probes=10).passed
    # all phi_j = t fails at T = 2 with witness at the far corner
    rep = verify_multilinear_condition(
        [P1, P1, P1, P1], MultiYoungCondition(c=(1.0, 0.0, 0.0, 0.0), T=2.0, N=3), probes=10
    )
    assert not rep.passed
    # the quadruple used by the trilinear dilated suite
    cond_q = MultiYoungCondition(c=(0.0, 0.5, 0.5, 0.0), T=math.inf, N=3)
    assert verify_multilinear_condition([PINF, P2, P2, P1], cond_q, probes=10).passed


def test_multilinear_rejects_large_n():
    with pytest.raises(ValueError):
        verify_multilinear_condition(
            [P1] * 5, MultiYoungCondition(c=(1.0,) * 5, T=1.0, N=4), probes=8
        )


def test_appendix_b_holder_variant():
    # phi1 = phi2 = t^2, phi0 = t: inverse product = s = phi0^{-1}(s)
    rep = appendix_b_checks([P1, P2, P2], C=1.0, s_max=10.0, probes=16, variant="holder")
    assert isinstance(rep, AppendixBReport)
    assert rep.hypothesis.passed
    assert rep.conclusion is not None and rep.conclusion.passed
    assert rep.passed


def test_appendix_b_power_variant_pinf():
    # phi0 = indicator: hypothesis s <= C s * 1 holds with C = 1
    rep = appendix_b_checks([PINF, P2, P2], C=1.0, s_max=10.0, probes=16, variant="power")
    assert rep.hypothesis.passed
    assert rep.conclusion is not None and rep.conclusion.passed


def test_appendix_b_power_variant_hypothesis_fails_near_zero():
    # phi0 = t needs s <= C s^2 which fails as s -> 0
    rep = appendix_b_checks([P1, P2, P2], C=1.0, s_max=10.0, probes=16, variant="power")
    assert not rep.hypothesis.passed
    assert rep.conclusion is None
    # the inequality s <= s^2 fails on all of (0, 1); the recorded witness
    # is the worst violation, which sits at s = 1/2
    assert rep.hypothesis.witness[0] < 1.0


def test_parse_grammar():
    assert parse_young("p:2") == P2
    assert parse_young("pinf") == PINF
    assert parse_young("exp") == EXP
    assert parse_young("exp1") == EXP1
    assert format_young(parse_young("p:1.5")) == "p:1.5"
    with pytest.raises(ValueError, match="p:<real>"):
        parse_young("P:2")  # case-sensitive
    with pytest.raises(ValueError):
        parse_young("p:galaxy")
    with pytest.raises(ValueError):
        parse_young("p:0.5")
