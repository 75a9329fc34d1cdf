"""Luxemburg norms over weighted discrete measures, and duality helpers.

The Luxemburg norm of a sampled function f against a (quasi-)Young function
phi is ``inf{lam > 0 : sum_i w_i phi(|f_i| / lam) <= 1}``.  The gauge
``G(lam)`` is nonincreasing in lam, so the infimum is found by bracketing
and bisection; for gauges with a zero plateau (e.g. the l^inf indicator)
the infimum is attained at the plateau edge and that edge is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .young import QuasiYoungFunction, YoungFunction, conjugate, phi_for_exponent

__all__ = [
    "WeightedMeasure",
    "SampledFunction",
    "counting_measure",
    "luxemburg_norm",
    "luxemburg_norm_values",
    "holder_pairing",
    "dual_witness",
    "HolderPairing",
]

_REL_TOL = 1e-12


@dataclass(frozen=True)
class WeightedMeasure:
    """Finite positive weights; all-ones is the counting measure."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0 or np.any(w <= 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be a nonempty 1-d array of positive finite reals")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.size


def counting_measure(n: int) -> WeightedMeasure:
    return WeightedMeasure(np.ones(n))


@dataclass(frozen=True)
class SampledFunction:
    """Complex samples paired with the measure they integrate against."""

    values: np.ndarray
    measure: WeightedMeasure

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).ravel()
        if v.size != len(self.measure):
            raise ValueError("values and weights must have equal length")
        object.__setattr__(self, "values", v)


def luxemburg_norm_values(
    values: np.ndarray, weights: np.ndarray, phi: YoungFunction
) -> float:
    """Luxemburg norm of raw samples against raw weights."""
    mags = np.abs(np.asarray(values)).astype(float).ravel()
    w = np.asarray(weights, dtype=float).ravel()
    if mags.size == 0:
        return 0.0
    if mags.size != w.size:
        raise ValueError("values and weights must have equal length")
    if isinstance(phi, QuasiYoungFunction) and phi.order_r < 1.0:
        r = phi.order_r
        return luxemburg_norm_values(mags**r, w, phi.base) ** (1.0 / r)

    top = float(np.max(mags))
    if top == 0.0:
        return 0.0
    keep = mags > 0
    mags = mags[keep]
    w = w[keep]

    def gauge(lam: float) -> float:
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.asarray(phi.evaluate(mags / lam), dtype=float)
        return float(np.sum(vals * w))

    lo = top * 1e-6
    while gauge(lo) <= 1.0:
        lo *= 0.5
        if lo < 1e-300:
            return 0.0
    hi = lo
    while gauge(hi) > 1.0:
        hi *= 2.0
        if hi > 1e300:
            return math.inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if gauge(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= _REL_TOL * hi:
            break
    return hi


def luxemburg_norm(f: SampledFunction, phi: YoungFunction) -> float:
    return luxemburg_norm_values(f.values, f.measure.weights, phi)


@dataclass(frozen=True)
class HolderPairing:
    pairing: complex
    bound: float

    @property
    def holds(self) -> bool:
        return abs(self.pairing) <= self.bound * (1.0 + 1e-12) + 1e-300


def holder_pairing(f: SampledFunction, g: SampledFunction, phi: YoungFunction) -> HolderPairing:
    """Sesquilinear pairing sum w_i f_i conj(g_i) with its duality bound
    ``2 ||f||_phi ||g||_phi*``; the bound always dominates the pairing."""
    if isinstance(phi, QuasiYoungFunction) and phi.order_r < 1.0:
        raise ValueError("holder_pairing needs a Young function (order 1)")
    if f.measure.weights.shape != g.measure.weights.shape or not np.array_equal(
        f.measure.weights, g.measure.weights
    ):
        raise ValueError("f and g must share a measure")
    w = f.measure.weights
    pairing = complex(np.sum(w * f.values * np.conj(g.values)))
    bound = 2.0 * luxemburg_norm(f, phi) * luxemburg_norm(g, conjugate(phi))
    return HolderPairing(pairing=pairing, bound=bound)


def dual_witness(f: SampledFunction, p: float) -> SampledFunction:
    """Norming functional for the l^p scale.

    Returns g with ``||g||_{p'} = 1`` and ``pairing(f, g) = ||f||_p``:
    g_i is proportional to |f_i|^(p-1) phase(f_i) for finite p > 1, the
    phase vector for p = 1, and a point mass at the maximum for p = inf.
    """
    vals = f.values
    w = f.measure.weights
    mags = np.abs(vals)
    if not np.any(mags > 0):
        raise ValueError("dual_witness needs a nonzero function")
    if p < 1:
        raise ValueError("p must lie in [1, inf]")
    phase = np.where(mags > 0, vals / np.where(mags > 0, mags, 1.0), 0.0)
    if math.isinf(p):
        k = int(np.argmax(mags))
        g = np.zeros_like(vals)
        g[k] = phase[k] / w[k]
    elif p == 1.0:
        g = phase
    else:
        norm = float(np.sum(w * mags**p)) ** (1.0 / p)
        g = phase * (mags / norm) ** (p - 1.0)
    return SampledFunction(values=g, measure=f.measure)


def lp_norm(f: SampledFunction, p: float) -> float:
    """Closed-form weighted l^p norm, used as an oracle against the gauge."""
    mags = np.abs(f.values)
    w = f.measure.weights
    if math.isinf(p):
        return float(np.max(mags)) if mags.size else 0.0
    return float(np.sum(w * mags**p)) ** (1.0 / p)


def orlicz_norm_exponent(f: SampledFunction, p: float) -> float:
    """Luxemburg norm against the Young function realizing l^p."""
    return luxemburg_norm(f, phi_for_exponent(p))


def symbol_orlicz_norm(a, phi: YoungFunction) -> float:
    """Quadrature L^Phi norm of a phase-space symbol (weight h^2 per sample)."""
    n = a.values.size
    return luxemburg_norm_values(a.values.ravel(), np.full(n, a.grid.h**2), phi)


def wave_orlicz_norm(f, phi: YoungFunction) -> float:
    """Quadrature L^Phi norm of a wavefunction (weight h per sample)."""
    return luxemburg_norm_values(f.values, np.full(f.values.size, f.grid.h), phi)
