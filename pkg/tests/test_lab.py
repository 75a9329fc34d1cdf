import math

import numpy as np
import pytest

from qha.lab import (
    CANONICAL_CONV2_LAW,
    CANONICAL_CONV3_LAW,
    CANONICAL_MULT2_LAW,
    DilationLaw,
    SUITES,
    SuiteConfig,
    run_suite,
    suite_dilated_conv,
    suite_dilated_mult,
)


def test_dilation_law_validation():
    assert CANONICAL_CONV2_LAW.N == 2
    # trilinear law arithmetic: 1/4 + 1/4 + 1/2 = 1
    assert CANONICAL_CONV3_LAW.t == (2.0, 2.0, math.sqrt(2.0))
    assert CANONICAL_MULT2_LAW.mode == "multiplication"
    with pytest.raises(ValueError):
        DilationLaw(t=(1.0, 1.0), m=(1, 1), mode="convolution")  # sums to 2
    with pytest.raises(ValueError):
        DilationLaw(t=(1.0, 0.0), m=(1, -1), mode="convolution")
    with pytest.raises(ValueError):
        DilationLaw(t=(1.0, 1.0), m=(1, 2), mode="multiplication")
    with pytest.raises(ValueError):
        DilationLaw(t=(1.0,), m=(1,), mode="multiplication")


def test_law_mode_guards():
    cfg = SuiteConfig("dilated_conv", N=32, cases=1)
    with pytest.raises(ValueError):
        suite_dilated_conv(cfg, CANONICAL_MULT2_LAW)
    with pytest.raises(ValueError):
        suite_dilated_mult(cfg, CANONICAL_CONV2_LAW)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite(SuiteConfig("nosuch"))


def test_registry_covers_spec_suites():
    for sid in (
        "conv1",
        "conv2",
        "conv_schatt_exp",
        "dilated_conv",
        "dilated_mult",
        "kernel_identities",
        "rank_one_sums",
        "invariances",
        "bandlimited",
    ):
        assert sid in SUITES


def test_report_determinism():
    cfg = SuiteConfig("conv1", N=64, seed=7, cases=2)
    r1 = run_suite(cfg)
    r2 = run_suite(cfg)
    assert r1.to_dict() == r2.to_dict()


def test_report_schema():
    rep = run_suite(SuiteConfig("conv2", N=64, seed=1, cases=1))
    d = rep.to_dict()
    assert set(d) == {"suite", "config", "cases", "summary"}
    assert set(d["summary"]) == {"total", "passed", "max_ratio"}
    for case in d["cases"]:
        assert set(case) == {"id", "inputs_digest", "lhs", "bound", "ratio", "pass", "diagnostics"}
        assert isinstance(case["inputs_digest"], str) and len(case["inputs_digest"]) == 16
    assert d["config"]["N"] == 64
    assert d["config"]["seed"] == 1


def test_case_ratio_semantics():
    rep = run_suite(SuiteConfig("conv1", N=64, seed=3, cases=2))
    for c in rep.cases:
        if "skipped" in c.diagnostics:
            continue
        if c.bound > 0:
            assert c.ratio == pytest.approx(c.lhs / c.bound)
        assert c.passed == (c.ratio <= 1.0 + 1e-6)


def test_conv_suites_record_constants():
    rep = run_suite(SuiteConfig("conv1", N=64, seed=5, cases=1))
    diag = rep.cases[0].diagnostics
    assert "c" in diag and len(diag["c"]) == 3


def test_dilated_conv_psd_cases_present():
    rep = run_suite(SuiteConfig("dilated_conv", N=128, seed=2, cases=5))
    psd = [c for c in rep.cases if c.case_id.startswith("psd")]
    assert psd and all(c.passed for c in psd)
    assert all("min_eig_real" in c.diagnostics for c in psd)


def test_transition_erratum_case_reported():
    rep = run_suite(SuiteConfig("dilated_mult", N=128, seed=2, cases=1))
    tc = [c for c in rep.cases if c.case_id == "fsigma_transition_constants"]
    assert len(tc) == 1
    assert tc[0].passed
    assert tc[0].diagnostics["erratum_candidate"] is True
    assert tc[0].diagnostics["swapped_rel_err"] <= 1e-6


def test_rank_one_sums_saturation_recorded():
    rep = run_suite(SuiteConfig("rank_one_sums", N=64, seed=2, cases=3))
    tagged = [c for c in rep.cases if "saturates" in c.diagnostics]
    assert tagged
    assert {c.diagnostics["saturates"] for c in tagged} <= {"displayed(-2d)", "proof(+2d)"}


def test_worker_pool_env(monkeypatch):
    cfg = SuiteConfig("invariances", N=128, seed=9, cases=2)
    base = run_suite(cfg).to_dict()
    monkeypatch.setenv("QHA_THREADS", "1")
    serial = run_suite(cfg).to_dict()
    assert base == serial
