"""Operator matrices, singular spectra, and Orlicz Schatten norms.

The Nystrom scaling ``entries = h K(x_j, x_k)`` makes the matrix act on
samples the way the integral operator acts on L^2: under the unitary
identification f -> sqrt(h) (f(x_j))_j the matrix IS the operator, so its
singular values approximate the operator's.  All (2 pi)^(d/2) factors of
the symbol-class norms live in :func:`symbol_schatten_norm` alone, never in
the SVD layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .orlicz import luxemburg_norm_values
from .phasegrid import GridSpec, PhaseSymbol
from .weyl import OperatorKernel, QuantizationIndex, symbol_to_kernel
from .young import YoungFunction

__all__ = [
    "OperatorMatrix",
    "SingularSpectrum",
    "operator_matrix",
    "singular_values",
    "schatten_orlicz_norm",
    "symbol_schatten_norm",
    "symbol_singular_values",
    "trace_pairing",
    "holder_composition_check",
    "positivity_check",
    "HolderCompositionResult",
    "PositivityResult",
    "on_sequence_values",
]

_CLAMP_REL = 1e-14


@dataclass(frozen=True)
class OperatorMatrix:
    """Quadrature-scaled kernel, entries = h K(x_j, x_k)."""

    grid: GridSpec
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.shape != (self.grid.N, self.grid.N):
            raise ValueError("entries must be N x N")
        if not np.all(np.isfinite(e)):
            raise ValueError("entries must be finite")
        object.__setattr__(self, "entries", e)


@dataclass(frozen=True)
class SingularSpectrum:
    sigma: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.sigma, dtype=float)
        if s.ndim != 1 or np.any(s < 0) or np.any(np.diff(s) > 0):
            raise ValueError("sigma must be nonincreasing and nonnegative")
        object.__setattr__(self, "sigma", s)

    @property
    def operator_norm(self) -> float:
        return float(self.sigma[0]) if self.sigma.size else 0.0


def operator_matrix(K: OperatorKernel) -> OperatorMatrix:
    return OperatorMatrix(grid=K.grid, entries=K.grid.h * K.values)


def singular_values(M: OperatorMatrix) -> SingularSpectrum:
    """SVD values sorted descending; entries below 1e-14 * sigma_1 are
    clamped to zero so Orlicz gauges do not chase floating-point dust."""
    s = np.linalg.svd(M.entries, compute_uv=False)
    if s.size and s[0] > 0:
        s = np.where(s < _CLAMP_REL * s[0], 0.0, s)
    return SingularSpectrum(sigma=s)


def schatten_orlicz_norm(sigma: SingularSpectrum, phi: YoungFunction) -> float:
    """Luxemburg norm of the singular value sequence (counting measure)."""
    return luxemburg_norm_values(sigma.sigma, np.ones(sigma.sigma.size), phi)


def symbol_singular_values(a: PhaseSymbol, A: QuantizationIndex) -> SingularSpectrum:
    return singular_values(operator_matrix(symbol_to_kernel(a, A)))


def symbol_schatten_norm(
    a: PhaseSymbol, A: QuantizationIndex, phi: YoungFunction
) -> float:
    """Symbol-class norm (2 pi)^(d/2) || Op_A(a) ||_{I_phi} for d = 1."""
    return math.sqrt(2.0 * math.pi) * schatten_orlicz_norm(
        symbol_singular_values(a, A), phi
    )


def trace_pairing(M1: OperatorMatrix, M2: OperatorMatrix) -> complex:
    """Hilbert-Schmidt pairing Tr(M2^* M1)."""
    if M1.grid != M2.grid:
        raise ValueError("trace_pairing needs matrices on the same grid")
    return complex(np.sum(np.conj(M2.entries) * M1.entries))


@dataclass(frozen=True)
class HolderCompositionResult:
    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs * (1.0 + 1e-9)


def holder_composition_check(
    M1: OperatorMatrix,
    M2: OperatorMatrix,
    phi0: YoungFunction,
    phi1: YoungFunction,
    phi2: YoungFunction,
    factor: float = 2.0,
    check_condition: bool = True,
) -> HolderCompositionResult:
    """Check || M2 M1 ||_{I_phi0} <= factor ||M1||_{I_phi1} ||M2||_{I_phi2}.

    Requires phi0(t1 t2) <= phi1(t1) + phi2(t2) on a probe square, which is
    verified on a grid first (the composition Hoelder condition).  For the
    Lebesgue scale with 1/p1 + 1/p2 = 1/p0 pass factor=1 to check classical
    Hoelder without the 2.
    """
    if M1.grid != M2.grid:
        raise ValueError("matrices must share a grid")
    if check_condition:
        _require_holder_condition(phi0, phi1, phi2)
    lhs = schatten_orlicz_norm(
        singular_values(OperatorMatrix(M1.grid, M2.entries @ M1.entries)), phi0
    )
    rhs = factor * schatten_orlicz_norm(singular_values(M1), phi1) * schatten_orlicz_norm(
        singular_values(M2), phi2
    )
    return HolderCompositionResult(lhs=lhs, rhs=rhs)


def _require_holder_condition(phi0, phi1, phi2, t_max: float = 4.0, n: int = 48) -> None:
    t = np.linspace(0.0, t_max, n)
    f1 = np.asarray(phi1.evaluate(t), dtype=float)[:, None]
    f2 = np.asarray(phi2.evaluate(t), dtype=float)[None, :]
    prod = t[:, None] * t[None, :]
    lhs = np.asarray(phi0.evaluate(prod), dtype=float)
    rhs = f1 + f2
    viol = np.where(np.isinf(rhs), -np.inf, lhs - rhs)
    worst = float(np.max(viol))
    if worst > 1e-12:
        raise ValueError(
            f"composition condition phi0(t1 t2) <= phi1(t1) + phi2(t2) fails by {worst:.3e}"
        )


@dataclass(frozen=True)
class PositivityResult:
    min_eig_real: float
    operator_norm: float

    @property
    def passed(self) -> bool:
        return self.min_eig_real >= -1e-8 * self.operator_norm


def positivity_check(M: OperatorMatrix) -> PositivityResult:
    """Smallest eigenvalue of the Hermitian part; discretization-level
    negativity down to -1e-8 * sigma_1 still counts as positive."""
    E = M.entries
    fnorm = float(np.linalg.norm(E))
    if fnorm > 0 and float(np.linalg.norm(E - E.conj().T)) > 1e-8 * fnorm:
        raise ValueError("matrix is not (approximately) self-adjoint")
    H = 0.5 * (E + E.conj().T)
    eigs = np.linalg.eigvalsh(H)
    top = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    return PositivityResult(min_eig_real=float(eigs[0]), operator_norm=top)


def on_sequence_values(
    M: OperatorMatrix, F: np.ndarray, G: np.ndarray
) -> np.ndarray:
    """The sequence (M f_j, g_j) for orthonormal columns F, G; its l^Phi
    norm is a lower bound for the Schatten norm."""
    return np.einsum("ij,ik,kj->j", np.conj(G), M.entries, F)
