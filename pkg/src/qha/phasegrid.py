"""Self-dual grids, sampled wavefunctions and phase-space symbols.

Discretization conventions
--------------------------

* N is a power of two; the spacing is ``h = sqrt(2 pi / N)`` so that
  ``h^2 N = 2 pi`` exactly.  Sample points are ``x_j = h (j - N/2)``.
* With this spacing the dual grid coincides with the primal one
  (frequency spacing ``2 pi / (N h) = h``), and the unitary centered DFT
  below approximates the continuous unitary Fourier transform
  ``(2 pi)^(-1/2) integral f(x) e^(-i x xi) dx`` on the grid with no extra
  scaling: ``F_k = N^(-1/2) (-1)^k FFT((-1)^j f_j)_k`` for N divisible by 4.
* Phase-space symbols are N x N arrays ``values[j, k] = a(x_j, xi_k)`` with
  the same spacing on both axes.

Functions that evaluate between lattice points (dilation, resampling) use
the trigonometric interpolant of the samples, i.e. they are exact for
periodic band-limited data; inputs are gated by a tail check so the
periodic extension is indistinguishable from the decaying function the
samples represent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GridSpec",
    "WaveFunction",
    "PhaseSymbol",
    "TailReport",
    "TailError",
    "make_grid",
    "hermite",
    "fourier",
    "translate_modulate",
    "dilate",
    "convolve",
    "pointwise_multiply",
    "cdft",
    "icdft",
    "upsample",
    "resample_axis",
    "tail_report",
    "spectral_tail_fraction",
    "require_symbol_tails",
    "parity_flip",
    "gaussian_symbol",
    "quadrature_l2",
    "spacing_for",
]

TAIL_THRESHOLD = 1e-10


class TailError(ValueError):
    """Input carries too much mass near the grid boundary for the
    periodization implicit in grid operations to be harmless."""


def spacing_for(N: int) -> float:
    """Self-dual spacing sqrt(2 pi / N)."""
    return math.sqrt(2.0 * math.pi / N)


@dataclass(frozen=True)
class GridSpec:
    """Discretization of the line (d = 1) with self-dual spacing."""

    N: int
    h: float
    d: int = 1
    refine: int = 1

    @property
    def x(self) -> np.ndarray:
        """Sample points h (j - N/2), identical on the frequency axis."""
        return self.h * (np.arange(self.N) - self.N // 2)

    @property
    def length(self) -> float:
        return self.N * self.h

    def refined_x(self, q: int) -> np.ndarray:
        return (self.h / q) * (np.arange(q * self.N) - q * self.N // 2)


def make_grid(N: int, refine: int = 1) -> GridSpec:
    if N < 16 or N > 1024 or (N & (N - 1)) != 0:
        raise ValueError("N must be a power of two with 16 <= N <= 1024")
    if refine < 1:
        raise ValueError("refine must be a positive integer")
    return GridSpec(N=N, h=spacing_for(N), refine=refine)


@dataclass(frozen=True)
class WaveFunction:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.N,):
            raise ValueError("wave values must have length N")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class PhaseSymbol:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.N, self.grid.N):
            raise ValueError("symbol values must be N x N")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class TailReport:
    boundary_mass_fraction: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.boundary_mass_fraction <= self.threshold


def _outer_band_mask(N: int) -> np.ndarray:
    j = np.arange(N)
    margin = N // 16
    return (j < margin) | (j >= N - margin)


def _boundary_fraction(values: np.ndarray) -> float:
    mags = np.abs(values) ** 2
    total = float(mags.sum())
    if total == 0.0:
        return 0.0
    N = values.shape[0]
    band = _outer_band_mask(N)
    if values.ndim == 1:
        outer = float(mags[band].sum())
    else:
        mask = band[:, None] | band[None, :]
        outer = float(mags[mask].sum())
    return outer / total


def tail_report(obj: WaveFunction | PhaseSymbol, threshold: float = TAIL_THRESHOLD) -> TailReport:
    """Fraction of L^2 mass in the outer eighth of the grid per axis."""
    return TailReport(_boundary_fraction(obj.values), threshold)


def spectral_tail_fraction(sym: PhaseSymbol) -> float:
    """Boundary mass fraction of the symbol's 2-d DFT (periodic-smoothness
    proxy: small means the periodic interpolant represents the samples
    faithfully even when the samples themselves do not decay)."""
    spec = np.fft.fftshift(np.fft.fft2(sym.values))
    return _boundary_fraction(spec)


def require_wave_tails(*waves: WaveFunction, threshold: float = TAIL_THRESHOLD) -> None:
    for w in waves:
        rep = tail_report(w, threshold)
        if not rep.passed:
            raise TailError(
                f"wavefunction boundary mass {rep.boundary_mass_fraction:.3e} exceeds {threshold:.1e}"
            )


def require_symbol_tails(*syms: PhaseSymbol, threshold: float = TAIL_THRESHOLD) -> None:
    """Gate for symbols entering interpolation/convolution paths.

    A symbol passes when its spatial boundary mass is below the threshold,
    or (for symbols such as the constant 1 that legitimately do not decay)
    when its spectral boundary mass is: in that case the symbol coincides
    with its smooth periodic interpolant and grid operations are exact for
    it.  Symbols failing both sides are rejected, never silently wrapped.
    """
    for s in syms:
        rep = tail_report(s, threshold)
        if rep.passed:
            continue
        if spectral_tail_fraction(s) <= threshold:
            continue
        raise TailError(
            f"symbol boundary mass {rep.boundary_mass_fraction:.3e} exceeds {threshold:.1e} "
            "on both the sample and spectral sides"
        )


# ---------------------------------------------------------------------------
# centered unitary DFT


def _twiddle(N: int, ndim: int, axis: int) -> np.ndarray:
    tw = (-1.0) ** np.arange(N)
    shape = [1] * ndim
    shape[axis] = N
    return tw.reshape(shape)


def cdft(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Unitary centered DFT: approximates (2 pi)^(-1/2) int f(x) e^(-i x xi) dx."""
    v = np.asarray(values, dtype=complex)
    N = v.shape[axis]
    if N % 4 != 0:
        raise ValueError("centered DFT needs N divisible by 4")
    tw = _twiddle(N, v.ndim, axis)
    return tw * np.fft.fft(tw * v, axis=axis) / math.sqrt(N)


def icdft(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Inverse of :func:`cdft` (the e^(+i x xi) convention)."""
    v = np.asarray(values, dtype=complex)
    N = v.shape[axis]
    if N % 4 != 0:
        raise ValueError("centered DFT needs N divisible by 4")
    tw = _twiddle(N, v.ndim, axis)
    return tw * np.fft.ifft(tw * v, axis=axis) * math.sqrt(N)


def fourier(f: WaveFunction, sign: int = -1) -> WaveFunction:
    """Unitary Fourier transform on the self-dual grid; sign -1 is forward."""
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    vals = cdft(f.values) if sign == -1 else icdft(f.values)
    return WaveFunction(grid=f.grid, values=vals)


# ---------------------------------------------------------------------------
# Hermite functions


def hermite(n: int, grid: GridSpec) -> WaveFunction:
    """Samples of the n-th L^2-normalized Hermite function.

    Stable three-term recurrence on the normalized functions:
    h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}.
    Raises when the requested order no longer fits the grid window.
    """
    if n < 0 or n > grid.N // 4:
        raise ValueError("hermite order must satisfy 0 <= n <= N/4")
    x = grid.x
    h_prev = np.zeros_like(x)
    h_cur = math.pi ** (-0.25) * np.exp(-0.5 * x * x)
    for k in range(n):
        h_next = x * math.sqrt(2.0 / (k + 1)) * h_cur - math.sqrt(k / (k + 1.0)) * h_prev
        h_prev, h_cur = h_cur, h_next
    wave = WaveFunction(grid=grid, values=h_cur.astype(complex))
    rep = tail_report(wave)
    if not rep.passed:
        raise ValueError(
            f"hermite({n}) does not fit the N={grid.N} window "
            f"(boundary mass {rep.boundary_mass_fraction:.2e})"
        )
    return wave


# ---------------------------------------------------------------------------
# translations, modulations, parity


def _normalize_offsets(obj, shift, mod):
    if isinstance(obj, WaveFunction):
        return (int(shift),), (int(mod),)
    if np.isscalar(shift):
        shift = (shift, shift)
    if np.isscalar(mod):
        mod = (mod, mod)
    return tuple(int(s) for s in shift), tuple(int(m) for m in mod)


def translate_modulate(obj, shift=0, mod=0):
    """Translate by ``shift * h`` then modulate by ``e^{i <., mod * h>}``.

    Offsets are integers in grid units (grid-exact); translation is a
    circular index roll, modulation a unimodular pointwise phase.  For
    symbols, scalar offsets apply to both axes, pairs apply per axis.
    """
    shifts, mods = _normalize_offsets(obj, shift, mod)
    vals = obj.values
    for axis, s in enumerate(shifts):
        if s:
            vals = np.roll(vals, s, axis=axis)
    grid = obj.grid
    if isinstance(obj, WaveFunction):
        if mods[0]:
            vals = vals * np.exp(1j * grid.x * (mods[0] * grid.h))
        return WaveFunction(grid=grid, values=vals)
    phase = np.zeros((grid.N, grid.N))
    if mods[0]:
        phase = phase + grid.x[:, None] * (mods[0] * grid.h)
    if mods[1]:
        phase = phase + grid.x[None, :] * (mods[1] * grid.h)
    if mods[0] or mods[1]:
        vals = vals * np.exp(1j * phase)
    return PhaseSymbol(grid=grid, values=vals)


def parity_flip(obj):
    """a(X) -> a(-X) as the exact periodic index reversal."""
    vals = obj.values
    for axis in range(vals.ndim):
        idx = (-np.arange(vals.shape[axis])) % vals.shape[axis]
        vals = np.take(vals, idx, axis=axis)
    if isinstance(obj, WaveFunction):
        return WaveFunction(grid=obj.grid, values=vals)
    return PhaseSymbol(grid=obj.grid, values=vals)


# ---------------------------------------------------------------------------
# band-limited resampling and dilation


def _fft_coefficients(values: np.ndarray, axis: int) -> np.ndarray:
    return np.fft.fft(values, axis=axis) / values.shape[axis]


def resample_axis(values: np.ndarray, grid: GridSpec, points: np.ndarray, axis: int) -> np.ndarray:
    """Evaluate the trigonometric interpolant along one axis at arbitrary
    points (direct Fourier-series evaluation, O(N^2) per axis)."""
    coeff = _fft_coefficients(np.asarray(values, dtype=complex), axis)
    N = values.shape[axis]
    omega = 2.0 * math.pi * np.fft.fftfreq(N, d=grid.h)
    x0 = grid.x[0]
    E = np.exp(1j * np.outer(np.asarray(points) - x0, omega))
    return np.moveaxis(np.tensordot(E, np.moveaxis(coeff, axis, 0), axes=(1, 0)), 0, axis)


def dilate(a: PhaseSymbol, t: float, tail_threshold: float = TAIL_THRESHOLD) -> PhaseSymbol:
    """Samples of the band-limited interpolant of ``a`` at ``t X``.

    Separable per axis; t = 1 returns the input unchanged and t = -1 is the
    exact parity flip.  |t| must stay in [1/4, 4] to keep the evaluation
    points within a window where the periodic extension is harmless.
    """
    if t == 0 or not 0.25 <= abs(t) <= 4.0:
        raise ValueError("dilation factor must satisfy 1/4 <= |t| <= 4")
    if t == 1.0:
        return PhaseSymbol(grid=a.grid, values=a.values.copy())
    if t == -1.0:
        return parity_flip(a)
    require_symbol_tails(a, threshold=tail_threshold)
    sym = parity_flip(a) if t < 0 else a
    s = abs(t)
    points = s * a.grid.x
    vals = resample_axis(sym.values, a.grid, points, axis=0)
    vals = resample_axis(vals, a.grid, points, axis=1)
    if s > 1.0:
        # arguments t x beyond the window hold tail values of a, not the
        # periodic wrap the interpolant would return there
        half = 0.5 * a.grid.length
        inside = np.abs(points) < half
        vals = np.where(inside[:, None] & inside[None, :], vals, 0.0)
    return PhaseSymbol(grid=a.grid, values=vals)


def upsample(values: np.ndarray, q: int, axis: int) -> np.ndarray:
    """Refine one axis by an integer factor via frequency zero-padding.

    Returns samples of the trigonometric interpolant on the q-times finer
    lattice; the Nyquist bin is split symmetrically.
    """
    if q == 1:
        return np.asarray(values, dtype=complex)
    v = np.moveaxis(np.asarray(values, dtype=complex), axis, 0)
    N = v.shape[0]
    F = np.fft.fft(v, axis=0)
    out_shape = (q * N,) + v.shape[1:]
    G = np.zeros(out_shape, dtype=complex)
    half = N // 2
    G[:half] = F[:half]
    G[-(half - 1):] = F[-(half - 1):]
    G[half] = 0.5 * F[half]
    G[q * N - half] += 0.5 * F[half]
    out = np.fft.ifft(G, axis=0) * q
    return np.moveaxis(out, 0, axis)


# ---------------------------------------------------------------------------
# convolution and multiplication


def convolve(a: PhaseSymbol, b: PhaseSymbol, tail_threshold: float = TAIL_THRESHOLD) -> PhaseSymbol:
    """Linear (zero-padded) convolution scaled by the quadrature factor h^2,
    cropped back to the grid window.

    Linear rather than circular: the continuity theorems live on the plane,
    and circular wraparound would corrupt their constants.
    """
    if a.grid != b.grid:
        raise ValueError("convolve needs symbols on the same grid")
    require_symbol_tails(a, b, threshold=tail_threshold)
    N = a.grid.N
    M = 2 * N
    fa = np.fft.fft2(a.values, s=(M, M))
    fb = np.fft.fft2(b.values, s=(M, M))
    full = np.fft.ifft2(fa * fb)
    lo = N // 2
    out = full[lo : lo + N, lo : lo + N] * a.grid.h**2
    return PhaseSymbol(grid=a.grid, values=out)


def pointwise_multiply(a: PhaseSymbol, b: PhaseSymbol) -> PhaseSymbol:
    if a.grid != b.grid:
        raise ValueError("pointwise_multiply needs symbols on the same grid")
    return PhaseSymbol(grid=a.grid, values=a.values * b.values)


# ---------------------------------------------------------------------------
# conveniences


def gaussian_symbol(grid: GridSpec, alpha: float = 1.0) -> PhaseSymbol:
    """e^{-alpha |X|^2} sampled on the symbol grid."""
    x = grid.x
    r2 = x[:, None] ** 2 + x[None, :] ** 2
    return PhaseSymbol(grid=grid, values=np.exp(-alpha * r2).astype(complex))


def quadrature_l2(obj: WaveFunction | PhaseSymbol) -> float:
    """Quadrature L^2 norm (weight h per axis)."""
    w = obj.grid.h ** (1 if isinstance(obj, WaveFunction) else 2)
    return math.sqrt(w * float(np.sum(np.abs(obj.values) ** 2)))
