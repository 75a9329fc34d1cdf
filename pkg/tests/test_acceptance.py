"""Acceptance suite: every quantitative exit criterion at desk scale.

Each test prints one pass/fail line; run with ``pytest tests/test_acceptance.py -v -s``
to see them.  All tolerances are pinned here, none are calibrated at runtime.
"""

import math

import numpy as np
import pytest

from qha.lab import SuiteConfig, run_suite
from qha.orlicz import luxemburg_norm_values
from qha.phasegrid import gaussian_symbol, make_grid, quadrature_l2
from qha.rng import random_test_inputs
from qha.schatten import (
    OperatorMatrix,
    SingularSpectrum,
    holder_composition_check,
    operator_matrix,
    positivity_check,
    schatten_orlicz_norm,
    singular_values,
    symbol_schatten_norm,
)
from qha.toeplitz import WindowPair, toeplitz_orlicz_bound, toeplitz_via_convolution
from qha.weyl import (
    ANTI_KOHN_NIRENBERG,
    KOHN_NIRENBERG,
    WEYL,
    symbol_to_kernel,
    wigner,
)
from qha.young import (
    ExpYoung,
    IndicatorYoung,
    PowerYoung,
    QuasiYoungFunction,
    appendix_b_checks,
    inverse,
)

N_DESK = 128
SEED = 42

P1, P2, PINF = PowerYoung(1), PowerYoung(2), IndicatorYoung()


def report(name: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def grid():
    return make_grid(N_DESK)


@pytest.fixture(scope="module")
def herm(grid):
    from qha.phasegrid import hermite

    return [hermite(n, grid) for n in range(8)]


def test_criterion_01_s2_equals_l2(grid):
    """s_2 = L^2 identity on 20 random symbols, rel err <= 1e-6."""
    worst = 0.0
    for i in range(20):
        a = random_test_inputs(SEED, i, "symbol", grid)
        s2 = symbol_schatten_norm(a, WEYL, P2)
        l2 = quadrature_l2(a)
        worst = max(worst, abs(s2 - l2) / l2)
    report("criterion 1: s2 = L2 identity", worst <= 1e-6, f"max rel err {worst:.2e}")


def test_criterion_02_rank_one_formula(grid, herm):
    """||W^A_{f,g}||_{s_{A,Phi}} = ||f|| ||g|| / Phi^{-1}(1), rel 1e-6."""
    worst = 0.0
    for A in (KOHN_NIRENBERG, WEYL, ANTI_KOHN_NIRENBERG):
        for m in range(5):
            for n in range(5):
                W = wigner(herm[m], herm[n], A)
                sig = singular_values(operator_matrix(symbol_to_kernel(W, A)))
                for phi in (P1, P2, ExpYoung()):
                    got = math.sqrt(2 * math.pi) * schatten_orlicz_norm(sig, phi)
                    want = 1.0 / inverse(phi, 1.0)
                    worst = max(worst, abs(got - want) / want)
    report("criterion 2: rank-one Orlicz Schatten formula", worst <= 1e-6, f"max rel err {worst:.2e}")


def test_criterion_03_moyal(grid, herm):
    """||W_{phi_m, phi_n}||_{L^2} = 1 +- 1e-8 for m, n <= 4."""
    worst = 0.0
    for m in range(5):
        for n in range(5):
            worst = max(worst, abs(quadrature_l2(wigner(herm[m], herm[n], WEYL)) - 1.0))
    report("criterion 3: Moyal normalization", worst <= 1e-8, f"max dev {worst:.2e}")


def test_criterion_04_conv_theorems():
    """Convolution bounds, 50 seeded cases x 4 Young triples each way."""
    ok = True
    detail = []
    for suite in ("conv1", "conv2"):
        rep = run_suite(SuiteConfig(suite, N=N_DESK, seed=SEED, cases=50))
        skipped = sum(1 for c in rep.cases if "skipped" in c.diagnostics)
        ok = ok and rep.all_passed and skipped == 0
        detail.append(f"{suite}: {rep.summary['passed']}/{rep.summary['total']} max ratio {rep.summary['max_ratio']:.4f}")
    report("criterion 4: convolution theorems", ok, "; ".join(detail))


def test_criterion_05_conv_schatt_expansion():
    """h_{j,k} double-sum and L^1 bounds with Hermite families J = 6."""
    rep = run_suite(SuiteConfig("conv_schatt_exp", N=N_DESK, seed=SEED, cases=6))
    report(
        "criterion 5: h_{j,k} expansion bounds",
        rep.all_passed,
        f"{rep.summary['passed']}/{rep.summary['total']} max ratio {rep.summary['max_ratio']:.6f}",
    )


def test_criterion_06_dilated_convolution():
    """Bilinear dilated convolution at (1/sqrt2, 1), 25 cases + PSD."""
    rep = run_suite(SuiteConfig("dilated_conv", N=N_DESK, seed=SEED, cases=25))
    psd = [c for c in rep.cases if c.case_id.startswith("psd")]
    report(
        "criterion 6: dilated convolution + positivity",
        rep.all_passed and len(psd) >= 5,
        f"{rep.summary['passed']}/{rep.summary['total']} max ratio {rep.summary['max_ratio']:.4f}",
    )


def test_criterion_07_kernel_identities():
    """Two-route kernel identities: N=2 at 1e-4 (desk grid), N=3 at 1e-3 (grid 32)."""
    rep = run_suite(SuiteConfig("kernel_identities", N=N_DESK, seed=SEED, cases=3))
    n2 = max(c.lhs for c in rep.cases if c.case_id.startswith("n2"))
    n3 = max(c.lhs for c in rep.cases if c.case_id.startswith("n3"))
    report(
        "criterion 7: kernel identities",
        rep.all_passed and n2 <= 1e-4 and n3 <= 1e-3,
        f"N=2 worst {n2:.2e}, N=3 worst {n3:.2e}",
    )


def test_criterion_08_dilated_multiplication():
    """Dilated multiplication at (1/sqrt2, 1/sqrt2) + F_sigma cross-route."""
    rep = run_suite(SuiteConfig("dilated_mult", N=N_DESK, seed=SEED, cases=25))
    route = max(c.lhs for c in rep.cases if "fsigma_route" in c.case_id)
    report(
        "criterion 8: dilated multiplication",
        rep.all_passed and route <= 1e-5,
        f"max ratio {rep.summary['max_ratio']:.4f}, route err {route:.2e}",
    )


def test_criterion_09_invariances():
    """Translations, modulations, F_sigma preserve s_{A,Phi} norms (1e-8)."""
    rep = run_suite(SuiteConfig("invariances", N=N_DESK, seed=SEED, cases=9))
    worst = max(c.lhs for c in rep.cases)
    report("criterion 9: invariance suite", rep.all_passed, f"worst rel dev {worst:.2e}")


def test_criterion_10_holder_composition():
    """Hoelder composition with factor 2 on 200 random pairs x 3 triples,
    plus classical Lebesgue Hoelder without the factor."""
    g = make_grid(16)
    rng = np.random.default_rng(123)
    triples = [(P1, P2, P2), (P2, PowerYoung(4), PowerYoung(4)), (P1, P1, PINF)]
    ok = True
    for phi0, phi1, phi2 in triples:
        for _ in range(200):
            A = OperatorMatrix(g, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
            B = OperatorMatrix(g, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
            res = holder_composition_check(A, B, phi0, phi1, phi2, check_condition=False)
            ok = ok and res.passed
    for _ in range(200):
        A = OperatorMatrix(g, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
        B = OperatorMatrix(g, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
        res = holder_composition_check(
            A, B, P2, PowerYoung(4), PowerYoung(4), factor=1.0, check_condition=False
        )
        ok = ok and res.passed
    report("criterion 10: Hoelder composition", ok)


def test_criterion_11_appendix_b():
    """Inverse-product hypotheses imply their inequalities, slack 1e-12."""
    rep1 = appendix_b_checks([P1, P2, P2], C=1.0, s_max=10.0, variant="holder")
    rep2 = appendix_b_checks([PINF, P2, P2], C=1.0, s_max=10.0, variant="power")
    rep3 = appendix_b_checks([P1, P2, P2], C=1.0, s_max=10.0, variant="power")
    ok = (
        rep1.passed
        and rep1.conclusion is not None
        and rep2.passed
        and rep2.conclusion is not None
        and not rep3.hypothesis.passed
    )
    report("criterion 11: inverse-product implications", ok)


def test_criterion_12_toeplitz(grid, herm):
    """Route agreement (m, n <= 6), continuity bound on 20 cases, PSD."""
    w = WindowPair(herm[0], herm[0])
    a = gaussian_symbol(grid, 0.7)
    M = toeplitz_via_convolution(a, w, WEYL)
    scale = max(
        abs(grid.h * np.vdot(herm[n].values, M.entries @ herm[n].values)) for n in range(7)
    )
    worst = 0.0
    from qha.toeplitz import toeplitz_direct_entry

    for m in range(7):
        for n in range(7):
            r1 = grid.h * np.vdot(herm[n].values, M.entries @ herm[m].values)
            r2 = toeplitz_direct_entry(a, w, herm[m], herm[n])
            worst = max(worst, abs(r1 - r2) / scale)
    bound_ok = True
    for i in range(20):
        sym = random_test_inputs(SEED, 900 + i, "symbol", grid)
        phi = (P1, P2)[i % 2]
        bound_ok = bound_ok and toeplitz_orlicz_bound(sym, w, phi).passed
    psd_ok = positivity_check(toeplitz_via_convolution(a, w, WEYL)).passed
    report(
        "criterion 12: Toeplitz routes, bound, positivity",
        worst <= 1e-5 and bound_ok and psd_ok,
        f"route rel err {worst:.2e}",
    )


def test_criterion_13_orlicz_core():
    """Luxemburg vs closed-form l^p (1000 sequences, 1e-10), r-power
    triangle (r in {1/2, 2/3}, 200 pairs), finite-rank bound (100 spectra)."""
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 24))
        vals = rng.normal(size=n) + 1j * rng.normal(size=n)
        p = float(rng.choice([1.0, 1.5, 2.0, 3.0, 4.0]))
        lux = luxemburg_norm_values(vals, np.ones(n), PowerYoung(p))
        closed = float(np.sum(np.abs(vals) ** p)) ** (1.0 / p)
        worst = max(worst, abs(lux - closed) / closed)
    tri_ok = True
    for r in (0.5, 2.0 / 3.0):
        phi = QuasiYoungFunction(P1, r)
        for _ in range(100):
            n = int(rng.integers(1, 12))
            a = rng.normal(size=n) + 1j * rng.normal(size=n)
            b = rng.normal(size=n) + 1j * rng.normal(size=n)
            na = luxemburg_norm_values(a, np.ones(n), phi)
            nb = luxemburg_norm_values(b, np.ones(n), phi)
            nab = luxemburg_norm_values(a + b, np.ones(n), phi)
            tri_ok = tri_ok and nab**r <= (na**r + nb**r) * (1 + 1e-9)
    rank_ok = True
    for _ in range(100):
        n = int(rng.integers(1, 20))
        sigma = np.sort(np.abs(rng.normal(size=n)))[::-1]
        spec = SingularSpectrum(sigma)
        for r, base in ((0.5, P2), (2.0 / 3.0, P1), (1.0, P2)):
            phi = QuasiYoungFunction(base, r) if r < 1 else base
            lhs = schatten_orlicz_norm(spec, phi)
            rhs = float(np.sum(sigma**r)) ** (1.0 / r) / inverse(phi, 1.0)
            rank_ok = rank_ok and lhs <= rhs * (1 + 1e-9)
    report(
        "criterion 13: Orlicz core",
        worst <= 1e-10 and tri_ok and rank_ok,
        f"lux-vs-lp max rel err {worst:.2e}",
    )
