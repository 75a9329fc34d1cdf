"""Op_A quantization on the grid: Wigner distributions, symbol/kernel maps.

The A-calculus (A = t I_d, here d = 1 and t = p/q rational) associates to a
phase-space symbol ``a`` the integral kernel

    K(x, y) = (2 pi)^(-1/2) (F2^{-1} a)(x - A (x - y), x - y),

where ``F2^{-1}`` is the unitary inverse Fourier transform in the frequency
variable.  On the self-dual grid the inner transform is the centered DFT and
the coordinate substitution is evaluated on a q-times refined x-lattice, on
which it is exact for A in {0, 1/2, 1} (and any p/q with q | 4).  The
difference variable x - y is treated through the L-periodicity that the
discrete frequency sampling induces, so symbol -> kernel -> symbol is an
identity up to the far tail of the kernel.

The A-Wigner distribution W^A_{f,g} is the symbol quantizing to the rank-one
operator (2 pi)^(-1/2) f (x) conj(g); the same refined-lattice bookkeeping
computes it directly from wave samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .phasegrid import (
    GridSpec,
    PhaseSymbol,
    WaveFunction,
    cdft,
    icdft,
    require_symbol_tails,
    require_wave_tails,
    upsample,
)

__all__ = [
    "QuantizationIndex",
    "OperatorKernel",
    "AffineChartMaps",
    "KOHN_NIRENBERG",
    "WEYL",
    "ANTI_KOHN_NIRENBERG",
    "wigner",
    "symbol_to_kernel",
    "kernel_to_symbol",
    "calculi_transform",
    "symplectic_fourier",
    "weyl_adjoint_symbol",
]


@dataclass(frozen=True)
class QuantizationIndex:
    """Scalar quantization parameter A = p/q with q in {1, 2, 4}."""

    p: int
    q: int

    def __post_init__(self):
        if self.q not in (1, 2, 4):
            raise ValueError("denominator must be one of 1, 2, 4")
        if not 0 <= self.p <= self.q:
            raise ValueError("A must lie in [0, 1]")
        frac = Fraction(self.p, self.q)
        if frac.denominator not in (1, 2, 4):
            raise ValueError("A must have denominator dividing 4 in lowest terms")

    @classmethod
    def from_value(cls, value: float) -> "QuantizationIndex":
        frac = Fraction(value).limit_denominator(4)
        if float(frac) != value:
            raise ValueError(f"A={value} is not representable as p/q with q | 4")
        return cls(frac.numerator, frac.denominator)

    @property
    def value(self) -> float:
        return self.p / self.q

    @property
    def complement(self) -> "QuantizationIndex":
        return QuantizationIndex(self.q - self.p, self.q)


KOHN_NIRENBERG = QuantizationIndex(0, 1)
WEYL = QuantizationIndex(1, 2)
ANTI_KOHN_NIRENBERG = QuantizationIndex(1, 1)


@dataclass(frozen=True)
class OperatorKernel:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.N, self.grid.N):
            raise ValueError("kernel values must be N x N")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class AffineChartMaps:
    """Affine charts used by the dilated-convolution kernel identities.

    ``S_t(z, x, y) = (t z + (x-y)/(2t), t z - (x-y)/(2t))``
    ``T_{t,s}(z, x, y) = S_t(z, x, y) + (s (x+y)/2) (1, 1)`` with T_t = T_{t,t}
    ``S0z(x, y) = (z + x, z + y)``, ``S1z(x, y) = (z - x, z - y)``.
    """

    kind: str
    t: float = 1.0
    s: float = 1.0
    z: float = 0.0

    def point(self, z: float, x, y):
        if self.kind == "S_t":
            if self.t == 0:
                raise ValueError("S_t needs t != 0")
            half = (np.asarray(x) - np.asarray(y)) / (2.0 * self.t)
            return self.t * z + half, self.t * z - half
        if self.kind in ("T_t", "T_ts"):
            if self.t == 0:
                raise ValueError("T_t needs t != 0")
            s = self.t if self.kind == "T_t" else self.s
            half = (np.asarray(x) - np.asarray(y)) / (2.0 * self.t)
            mid = s * (np.asarray(x) + np.asarray(y)) / 2.0
            return self.t * z + half + mid, self.t * z - half + mid
        if self.kind == "S0z":
            return self.z + np.asarray(x), self.z + np.asarray(y)
        if self.kind == "S1z":
            return self.z - np.asarray(x), self.z - np.asarray(y)
        raise ValueError(f"unknown chart kind {self.kind!r}")


def wigner(f: WaveFunction, g: WaveFunction, A: QuantizationIndex) -> PhaseSymbol:
    """A-Wigner distribution of the pair (f, g) on the symbol grid.

    W^A_{f,g}(x, xi) = (2 pi)^(-1/2) int f(x + A y) conj(g(x - (1-A) y))
    e^{-i y xi} dy; the product under the transform is assembled on the
    q-refined lattice where the arguments are exact lattice points.
    """
    if f.grid != g.grid:
        raise ValueError("wigner needs waves on the same grid")
    require_wave_tails(f, g)
    grid = f.grid
    N, p, q = grid.N, A.p, A.q
    fr = upsample(f.values, q, axis=0)
    gr = upsample(g.values, q, axis=0)
    j = np.arange(N)[:, None]
    m = np.arange(N)[None, :]
    i_f = q * j + p * m - p * (N // 2)
    i_g = q * j - (q - p) * m + (q - p) * (N // 2)
    u = np.where((i_f >= 0) & (i_f < q * N), fr[np.clip(i_f, 0, q * N - 1)], 0.0)
    v = np.where((i_g >= 0) & (i_g < q * N), gr[np.clip(i_g, 0, q * N - 1)], 0.0)
    return PhaseSymbol(grid=grid, values=cdft(u * np.conj(v), axis=1))


def symbol_to_kernel(
    a: PhaseSymbol, A: QuantizationIndex, tail_threshold: float = 1e-10
) -> OperatorKernel:
    """Integral kernel of Op_A(a) (no quadrature weight; see OperatorMatrix)."""
    require_symbol_tails(a, threshold=tail_threshold)
    grid = a.grid
    N, p, q = grid.N, A.p, A.q
    b = icdft(a.values, axis=1)
    b_up = upsample(b, q, axis=0)
    j = np.arange(N)[:, None]
    k = np.arange(N)[None, :]
    rows = (q - p) * j + p * k
    cols = j - k + N // 2
    # the difference variable only reaches |x - y| < L/2 on the t-lattice;
    # beyond it the kernel of a tail-gated symbol has decayed, so read 0
    # rather than the L-periodic wrap of the inner transform
    ok = (cols >= 0) & (cols < N)
    K = np.where(ok, b_up[rows, np.clip(cols, 0, N - 1)], 0.0) / math.sqrt(2.0 * math.pi)
    return OperatorKernel(grid=grid, values=K)


def kernel_to_symbol(K: OperatorKernel, A: QuantizationIndex) -> PhaseSymbol:
    """Inverse of :func:`symbol_to_kernel` under the same conventions."""
    grid = K.grid
    N, p, q = grid.N, A.p, A.q
    K_up = upsample(upsample(K.values, q, axis=0), q, axis=1)
    j = np.arange(N)[:, None]
    m = np.arange(N)[None, :]
    rows = q * j + p * m - p * (N // 2)
    cols = q * j - (q - p) * m + (q - p) * (N // 2)
    ok = (rows >= 0) & (rows < q * N) & (cols >= 0) & (cols < q * N)
    G = np.where(
        ok,
        K_up[np.clip(rows, 0, q * N - 1), np.clip(cols, 0, q * N - 1)],
        0.0,
    ) * math.sqrt(2.0 * math.pi)
    return PhaseSymbol(grid=grid, values=cdft(G, axis=1))


def calculi_transform(
    a: PhaseSymbol, A1: QuantizationIndex, A2: QuantizationIndex
) -> PhaseSymbol:
    """Symbol of the same operator in another calculus.

    Transported through the kernel: Op_{A1}(a) and Op_{A2}(result) have the
    identical kernel by construction, which is the defining property.
    """
    if A1 == A2:
        return PhaseSymbol(grid=a.grid, values=a.values.copy())
    return kernel_to_symbol(symbol_to_kernel(a, A1), A2)


def symplectic_fourier(a: PhaseSymbol) -> PhaseSymbol:
    """Symplectic Fourier transform
    (F_sigma a)(x, xi) = pi^(-d) iint a(y, eta) e^{2i(y xi - x eta)} dy deta.

    Computed through the Weyl kernel: the kernel of Op^w(F_sigma a) is
    K(-x, y), an exact index map on the grid; this keeps F_sigma an exact
    involution and an exact isometry of every Schatten symbol norm on its
    natural domain.  The factor 2 in the exponent doubles frequencies, so
    on an N-point grid that domain is the half band: symbols with spectral
    content beyond |index offset| = N/4 lose that content (any grid
    realization of F_sigma must fold it).
    """
    K = symbol_to_kernel(a, WEYL)
    N = K.grid.N
    flipped = K.values[(-np.arange(N)) % N, :]
    return kernel_to_symbol(OperatorKernel(grid=K.grid, values=flipped), WEYL)


def weyl_adjoint_symbol(a: PhaseSymbol) -> PhaseSymbol:
    """Symbol of Op^w(a)^*, which is the complex conjugate symbol."""
    return PhaseSymbol(grid=a.grid, values=np.conj(a.values))
