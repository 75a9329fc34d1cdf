import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qha.orlicz import (
    SampledFunction,
    WeightedMeasure,
    counting_measure,
    dual_witness,
    holder_pairing,
    lp_norm,
    luxemburg_norm,
    luxemburg_norm_values,
)
from qha.young import (
    ExpYoung,
    IndicatorYoung,
    PowerYoung,
    QuasiYoungFunction,
    inverse,
)

P1, P2, PINF = PowerYoung(1), PowerYoung(2), IndicatorYoung()


def seq(values, weights=None):
    values = np.asarray(values, dtype=complex)
    measure = WeightedMeasure(np.asarray(weights, float)) if weights is not None else counting_measure(values.size)
    return SampledFunction(values=values, measure=measure)


def test_luxemburg_lp_examples():
    assert luxemburg_norm(seq([3, 4]), P2) == pytest.approx(5.0, rel=1e-12)
    assert luxemburg_norm(seq(np.ones(17)), PINF) == pytest.approx(1.0, rel=1e-12)
    assert luxemburg_norm(seq([1, 1]), QuasiYoungFunction(P1, 0.5)) == pytest.approx(4.0, rel=1e-10)


def test_luxemburg_single_entry_rank_one_rule():
    # one-term oracle: gauge phi(sigma / lam) <= 1 iff lam >= sigma / phi^{-1}(1)
    for phi in (P1, P2, ExpYoung()):
        for sigma in (0.3, 1.0, 42.0):
            got = luxemburg_norm(seq([sigma]), phi)
            assert got == pytest.approx(sigma / inverse(phi, 1.0), rel=1e-10)


def test_luxemburg_zero_and_empty():
    assert luxemburg_norm(seq([0.0, 0.0]), P2) == 0.0
    assert luxemburg_norm_values(np.array([]), np.array([]), P2) == 0.0


def test_luxemburg_weighted_matches_lp():
    w = np.array([0.5, 2.0, 1.25])
    f = seq([1.0, -2.0, 3.0j], weights=w)
    for p in (1.0, 1.5, 2.0, 4.0):
        assert luxemburg_norm(f, PowerYoung(p)) == pytest.approx(lp_norm(f, p), rel=1e-10)
    assert luxemburg_norm(f, PINF) == pytest.approx(3.0, rel=1e-10)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False), min_size=1, max_size=12),
    st.floats(min_value=0.01, max_value=100.0),
    st.sampled_from([1.0, 1.5, 2.0, 4.0]),
)
def test_absolute_homogeneity(vals, alpha, p):
    f = seq(vals)
    phi = PowerYoung(p)
    base = luxemburg_norm(f, phi)
    scaled = luxemburg_norm(seq(alpha * np.asarray(vals)), phi)
    assert scaled == pytest.approx(alpha * base, rel=1e-10, abs=1e-12)


def test_monotone_domination():
    # phi2 <= phi1 pointwise implies the norms order the same way
    rng = np.random.default_rng(5)
    f = seq(rng.normal(size=9) + 1j * rng.normal(size=9))
    assert luxemburg_norm(f, P1) >= luxemburg_norm(f, QuasiYoungFunction(P1, 1.0))
    n4 = luxemburg_norm(f, PowerYoung(4))
    n2 = luxemburg_norm(f, P2)
    scale = max(abs(f.values))
    # on sequences scaled inside [0, 1], t^4 <= t^2 so ||.||_4 <= ||.||_2
    g = seq(f.values / (2 * scale))
    assert luxemburg_norm(g, PowerYoung(4)) <= luxemburg_norm(g, P2) * (1 + 1e-10)
    del n4, n2


def test_triangle_inequality_young():
    rng = np.random.default_rng(6)
    for _ in range(30):
        a = rng.normal(size=7) + 1j * rng.normal(size=7)
        b = rng.normal(size=7) + 1j * rng.normal(size=7)
        for phi in (P1, P2, ExpYoung()):
            na = luxemburg_norm(seq(a), phi)
            nb = luxemburg_norm(seq(b), phi)
            nab = luxemburg_norm(seq(a + b), phi)
            assert nab <= (na + nb) * (1 + 1e-9)


@pytest.mark.parametrize("r", [0.5, 2.0 / 3.0])
def test_r_power_triangle_quasi(r):
    rng = np.random.default_rng(7)
    phi = QuasiYoungFunction(P2, r)
    for _ in range(40):
        a = rng.normal(size=6) + 1j * rng.normal(size=6)
        b = rng.normal(size=6) + 1j * rng.normal(size=6)
        na = luxemburg_norm(seq(a), phi)
        nb = luxemburg_norm(seq(b), phi)
        nab = luxemburg_norm(seq(a + b), phi)
        assert nab**r <= (na**r + nb**r) * (1 + 1e-9)


def test_gauge_consistency():
    rng = np.random.default_rng(8)
    vals = rng.normal(size=11)
    w = np.abs(rng.normal(size=11)) + 0.1
    for phi in (P1, P2, ExpYoung()):
        lam = luxemburg_norm_values(vals, w, phi)
        gauge = float(np.sum(w * np.asarray(phi.evaluate(np.abs(vals) / (lam * (1 + 1e-9))))))
        assert gauge <= 1.0 + 1e-7


def test_holder_pairing_examples():
    hp = holder_pairing(seq([1.0]), seq([1.0]), P2)
    assert hp.pairing == pytest.approx(1.0)
    assert hp.bound == pytest.approx(2.0)
    hp = holder_pairing(seq([3.0, 4.0]), seq([0.6, 0.8]), P2)
    assert hp.pairing == pytest.approx(5.0)
    assert hp.bound == pytest.approx(10.0)


def test_holder_pairing_random_property():
    rng = np.random.default_rng(9)
    # 1000 pairs on the analytic-conjugate kinds, a smaller batch on the
    # numerically conjugated one (each of its gauge evaluations runs a sup)
    batches = [(P1, 334), (PowerYoung(1.5), 333), (P2, 333), (ExpYoung(), 40)]
    for phi, count in batches:
        for _ in range(count):
            n = rng.integers(1, 9)
            f = seq(rng.normal(size=n) + 1j * rng.normal(size=n))
            g = SampledFunction(rng.normal(size=n) + 1j * rng.normal(size=n), f.measure)
            hp = holder_pairing(f, g, phi)
            assert abs(hp.pairing) <= hp.bound * (1 + 1e-9)


def test_holder_pairing_measure_mismatch():
    with pytest.raises(ValueError):
        holder_pairing(seq([1.0, 2.0]), seq([1.0, 2.0], weights=[1.0, 3.0]), P2)


def test_dual_witness_examples():
    f = seq([3.0, 4.0])
    g = dual_witness(f, 2.0)
    assert np.allclose(g.values, [0.6, 0.8])
    f = seq([2.0, 1.0])
    g = dual_witness(f, math.inf)
    assert np.allclose(g.values, [1.0, 0.0])
    pairing = np.sum(f.measure.weights * f.values * np.conj(g.values))
    assert pairing == pytest.approx(2.0)


def test_dual_witness_attains_norm():
    rng = np.random.default_rng(10)
    for p in (1.0, 1.5, 2.0, 3.0, math.inf):
        vals = rng.normal(size=8) + 1j * rng.normal(size=8)
        w = np.abs(rng.normal(size=8)) + 0.2
        f = seq(vals, weights=w)
        g = dual_witness(f, p)
        pairing = complex(np.sum(w * f.values * np.conj(g.values)))
        assert abs(pairing.imag) < 1e-12 * abs(pairing.real)
        assert pairing.real == pytest.approx(lp_norm(f, p), rel=1e-10)
        pprime = math.inf if p == 1.0 else (1.0 if math.isinf(p) else p / (p - 1.0))
        assert lp_norm(g, pprime) == pytest.approx(1.0, rel=1e-10)


def test_dual_witness_rejects_zero():
    with pytest.raises(ValueError):
        dual_witness(seq([0.0, 0.0]), 2.0)
