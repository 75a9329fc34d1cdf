"""Young and quasi-Young functions on the extended half-line.

A Young function is a convex nondecreasing map ``[0, inf] -> [0, inf]`` with
``phi(0) = 0`` and ``phi(inf) = inf``; the value ``+inf`` is a legitimate
output and is represented by ``numpy.inf``.  Throughout the package the
extended-real product uses the measure-theoretic convention ``inf * 0 = 0``,
so gauges built from the indicator function behave correctly on zero
arguments.

The module provides evaluation, Legendre-type conjugation, generalized
inverses, local Delta-2 diagnostics, and grid verification of the
three-factor and multilinear Young conditions that drive every convolution
bound in the rest of the package.

Conjugation convention for powers: ``conjugate(t^p) = t^(p')`` with
``1/p + 1/p' = 1`` (and ``t^1 -> indicator``), i.e. the classical
exponent-level rule rather than the pointwise Legendre transform
``t^(p') / (p' p^(p'/p))``.  The exponent-level conjugate dominates the
pointwise one, so Young's inequality ``s t <= phi(s) + conjugate(phi)(t)``
still holds everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "YoungFunction",
    "PowerYoung",
    "IndicatorYoung",
    "ExpYoung",
    "ExpMinusOneMinusT",
    "TabulatedYoung",
    "NumericConjugate",
    "QuasiYoungFunction",
    "TriYoungCondition",
    "MultiYoungCondition",
    "ConditionReport",
    "AppendixBReport",
    "conjugate",
    "inverse",
    "delta2_constant",
    "verify_tri_condition",
    "verify_multilinear_condition",
    "lebesgue_constants",
    "appendix_b_checks",
    "conjugate_exponent",
    "phi_for_exponent",
    "parse_young",
    "format_young",
    "ext_mul",
    "YOUNG_GRAMMAR",
]

#: Fixed slack below which a grid violation is considered numerical noise.
CONDITION_SLACK = 1e-12

#: Probe window used when a condition is certified for all T (T = inf sentinel).
DEFAULT_PROBE_T = 10.0

_CONJUGATE_GRID_POINTS = 4096
_BISECT_REL_TOL = 1e-13
_BISECT_MAX_ITER = 200


def ext_mul(a, b):
    """Extended-real product with ``inf * 0 = 0``, vectorized."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(invalid="ignore"):
        out = a * b
    zero = (a == 0.0) | (b == 0.0)
    return np.where(zero, 0.0, out)


def _as_nonneg_array(t) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0):
        raise ValueError("Young functions are defined on [0, inf] only")
    return arr


class YoungFunction:
    """Base class; concrete kinds implement :meth:`evaluate`."""

    #: quasi-Young order; genuine Young functions have order 1
    order_r: float = 1.0
    has_analytic_conjugate: bool = False
    has_analytic_inverse: bool = False

    def evaluate(self, t):
        raise NotImplementedError

    def __call__(self, t):
        return self.evaluate(t)

    def is_positive_on(self, t_max: float = 1.0) -> bool:
        """True if phi(t) > 0 for sampled t in (0, t_max]."""
        probes = np.geomspace(t_max * 1e-12, t_max, 64)
        return bool(np.all(self.evaluate(probes) > 0))


@dataclass(frozen=True)
class PowerYoung(YoungFunction):
    """phi(t) = t**p for finite p >= 1; realizes the l^p scale."""

    p: float

    has_analytic_conjugate = True
    has_analytic_inverse = True

    def __post_init__(self):
        if not (1.0 <= self.p < math.inf):
            raise ValueError("power kind needs a finite exponent p >= 1")

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        with np.errstate(over="ignore"):
            out = arr**self.p
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class IndicatorYoung(YoungFunction):
    """phi(t) = 0 on [0, 1] and +inf beyond; the l^inf gauge."""

    has_analytic_conjugate = True
    has_analytic_inverse = True

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        out = np.where(arr <= 1.0, 0.0, np.inf)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class ExpYoung(YoungFunction):
    """phi(t) = e^t - 1."""

    has_analytic_inverse = True

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        with np.errstate(over="ignore"):
            out = np.expm1(arr)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class ExpMinusOneMinusT(YoungFunction):
    """phi(t) = e^t - 1 - t; vanishes to second order at 0."""

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        with np.errstate(over="ignore", invalid="ignore"):
            out = np.expm1(arr) - arr
        # inf - inf at t = inf
        out = np.where(np.isinf(arr), np.inf, out)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class TabulatedYoung(YoungFunction):
    """Piecewise-linear Young function from a monotone value table.

    The table is interpreted as points ``(ts[i], vs[i])`` with an implicit
    origin (0, 0); beyond the last node the final chord slope continues, so
    the result stays convex and tends to infinity.
    """

    ts: tuple[float, ...]
    vs: tuple[float, ...]

    def __post_init__(self):
        ts = np.asarray(self.ts, dtype=float)
        vs = np.asarray(self.vs, dtype=float)
        if ts.ndim != 1 or ts.shape != vs.shape or ts.size == 0:
            raise ValueError("table needs matching 1-d ts/vs")
        if np.any(np.diff(ts) <= 0) or ts[0] <= 0:
            raise ValueError("ts must be strictly increasing and positive")
        if np.any(np.diff(vs) < 0) or np.any(vs < 0):
            raise ValueError("vs must be nonnegative and nondecreasing")
        slopes = np.diff(np.concatenate(([0.0], vs))) / np.diff(
            np.concatenate(([0.0], ts))
        )
        if np.any(np.diff(slopes) < -1e-12):
            raise ValueError("table is not convex")
        if slopes[-1] <= 0:
            raise ValueError("final slope must be positive so phi(inf) = inf")

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        ts = np.concatenate(([0.0], np.asarray(self.ts, dtype=float)))
        vs = np.concatenate(([0.0], np.asarray(self.vs, dtype=float)))
        out = np.interp(arr, ts, vs)
        tail = arr > ts[-1]
        if np.any(tail):
            slope = (vs[-1] - vs[-2]) / (ts[-1] - ts[-2])
            out = np.where(tail, vs[-1] + slope * (arr - ts[-1]), out)
        out = np.where(np.isinf(arr), np.inf, out)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class NumericConjugate(YoungFunction):
    """Legendre-type conjugate sup_{s>=0}(s t - base(s)), computed per query.

    The sup is scanned on a 4096-point log grid whose upper end is grown
    until the objective is decreasing there, then sharpened by golden-section
    search around each argmax.  Every reported value is a maximum over
    finitely many s, hence a one-sided approximation from below of the true
    conjugate.
    """

    base: YoungFunction

    def _sup_batch(self, t: np.ndarray) -> np.ndarray:
        out = np.zeros_like(t)
        out[np.isinf(t)] = np.inf
        todo = (t > 0.0) & np.isfinite(t)
        if not np.any(todo):
            return out
        tv = t[todo]
        base = self.base
        s_hi = np.full(tv.shape, np.maximum(1.0, tv))
        lo = np.zeros_like(tv)
        hi = np.zeros_like(tv)
        best = np.full(tv.shape, -np.inf)
        open_mask = np.ones(tv.shape, dtype=bool)
        for _ in range(200):
            grid = np.concatenate(
                (np.zeros((1,) + tv.shape), np.geomspace(s_hi * 1e-12, s_hi, _CONJUGATE_GRID_POINTS))
            )
            with np.errstate(invalid="ignore", over="ignore"):
                obj = grid * tv[None] - np.asarray(base.evaluate(grid))
            obj = np.where(np.isnan(obj), -np.inf, obj)
            k = np.argmax(obj, axis=0)
            idx = np.arange(tv.size)
            best = np.maximum(best, obj[k, idx])
            interior = k < grid.shape[0] - 1
            sel = open_mask & interior
            lo = np.where(sel, grid[np.maximum(k - 1, 0), idx], lo)
            hi = np.where(sel, grid[np.minimum(k + 1, grid.shape[0] - 1), idx], hi)
            open_mask = open_mask & ~interior
            if not np.any(open_mask):
                break
            s_hi = np.where(open_mask, s_hi * 8.0, s_hi)
        else:
            best = np.where(open_mask, np.inf, best)
        best = np.where(best >= 1e300, np.inf, best)
        refine = np.isfinite(best)
        if np.any(refine):
            best[refine] = np.maximum(
                best[refine],
                _golden_max_batch(
                    lambda s: s * tv[refine] - np.asarray(base.evaluate(s)),
                    lo[refine],
                    hi[refine],
                ),
            )
        out[todo] = best
        return out

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        scalar = arr.ndim == 0
        res = self._sup_batch(np.atleast_1d(arr).astype(float))
        return float(res[0]) if scalar else res.reshape(arr.shape)


def _golden_max_batch(f, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo.copy(), hi.copy()
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(90):
        left = fc >= fd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c_new = b - inv_phi * (b - a)
        d_new = a + inv_phi * (b - a)
        c, d = c_new, d_new
        fc, fd = f(c), f(d)
    return np.maximum(fc, fd)


@dataclass(frozen=True)
class QuasiYoungFunction(YoungFunction):
    """phi(t) = base(t**r) for a Young base and order r in (0, 1]."""

    base: YoungFunction
    order_r: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.order_r <= 1.0):
            raise ValueError("quasi-Young order must lie in (0, 1]")
        if isinstance(self.base, QuasiYoungFunction):
            raise ValueError("base must be a genuine Young function")

    def evaluate(self, t):
        arr = _as_nonneg_array(t)
        with np.errstate(over="ignore"):
            powed = arr**self.order_r
        out = self.base.evaluate(powed)
        return out if np.ndim(out) else float(out)


def conjugate(phi: YoungFunction) -> YoungFunction:
    """Conjugate Young function phi* = sup_{s>=0}(s t - phi(s)).

    Analytic kinds map to analytic kinds (power p <-> power p', power 1 <->
    indicator); anything else falls back to the numeric sup.  Quasi-Young
    functions of order r < 1 are rejected: conjugation is a Young-function
    notion.
    """
    if isinstance(phi, QuasiYoungFunction):
        if phi.order_r == 1.0:
            return conjugate(phi.base)
        raise ValueError("conjugation is defined for Young functions only (order 1)")
    if isinstance(phi, PowerYoung):
        if phi.p == 1.0:
            return IndicatorYoung()
        return PowerYoung(conjugate_exponent(phi.p))
    if isinstance(phi, IndicatorYoung):
        return PowerYoung(1.0)
    return NumericConjugate(phi)


def inverse(phi: YoungFunction, s: float) -> float:
    """Generalized inverse inf{t >= 0 : phi(t) >= s}.

    Uses the closed form when the kind has one, otherwise bisection on the
    monotone evaluator at relative tolerance 1e-13; plateau ties resolve to
    the left edge, matching the infimum in the definition.
    """
    if s < 0:
        raise ValueError("inverse expects s >= 0")
    if s == 0.0:
        return 0.0
    if isinstance(phi, QuasiYoungFunction):
        return inverse(phi.base, s) ** (1.0 / phi.order_r)
    if isinstance(phi, PowerYoung):
        return float(s) ** (1.0 / phi.p) if not math.isinf(s) else math.inf
    if isinstance(phi, IndicatorYoung):
        return 1.0
    if isinstance(phi, ExpYoung):
        return math.log1p(s) if not math.isinf(s) else math.inf
    return _inverse_by_bisection(phi, float(s))


def _inverse_by_bisection(phi: YoungFunction, s: float) -> float:
    hi = 1.0
    for _ in range(2000):
        if float(phi.evaluate(hi)) >= s:
            break
        hi *= 2.0
    else:
        return math.inf
    lo = 0.0
    for _ in range(_BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if float(phi.evaluate(mid)) >= s:
            hi = mid
        else:
            lo = mid
        if hi - lo <= _BISECT_REL_TOL * max(hi, 1e-300):
            break
    return hi


def delta2_constant(phi: YoungFunction, T: float) -> float | None:
    """Local Delta-2 constant sup phi(2t)/phi(t) over a log grid on (0, T].

    Returns ``None`` when no finite constant exists on the window: some
    ratio is inf/finite, or phi vanishes at a point where phi(2t) > 0, or
    no grid point yields a well-defined positive ratio at all.
    """
    if not (T > 0):
        raise ValueError("T must be positive")
    grid = np.geomspace(T * 1e-8, T, 2048)
    v1 = np.asarray(phi.evaluate(grid), dtype=float)
    v2 = np.asarray(phi.evaluate(2.0 * grid), dtype=float)
    if np.any((v1 == 0.0) & (v2 > 0.0)):
        return None
    if np.any(np.isinf(v2) & np.isfinite(v1) & (v1 > 0.0)):
        return None
    ok = (v1 > 0.0) & np.isfinite(v1) & np.isfinite(v2)
    if not np.any(ok):
        return None
    return float(np.max(v2[ok] / v1[ok]))


@dataclass(frozen=True)
class TriYoungCondition:
    """Constants (c0, c1, c2) and window T for the three-factor condition

    t0 t1 t2 <= c1 phi0*(t0) phi1(t1) + c2 phi0*(t0) phi2(t2)
                + c0 phi1(t1) phi2(t2),   t_j in [0, T].

    ``T = math.inf`` is the sentinel for "holds globally"; probe grids then
    use :data:`DEFAULT_PROBE_T`.
    """

    c0: float
    c1: float
    c2: float
    T: float

    def __post_init__(self):
        if min(self.c0, self.c1, self.c2) < 0 or not self.T > 0:
            raise ValueError("need nonnegative constants and positive T")


@dataclass(frozen=True)
class MultiYoungCondition:
    """Constants (c0..cN) and window T for the N+1-variable condition

    t0 ... tN <= (sum_j c_j prod_{m != j} phi_m(t_m)) phi0*(t0)
                 + c0 prod_j phi_j(t_j),   t in [0, T].

    Note the labeling: for j >= 1 the coefficient c_j multiplies the product
    over Omega_j = {1..N} minus {j}, i.e. the product *omitting* phi_j.
    """

    c: tuple[float, ...]
    T: float
    N: int

    def __post_init__(self):
        if self.N < 2 or len(self.c) != self.N + 1:
            raise ValueError("need N >= 2 and exactly N+1 constants")
        if min(self.c) < 0 or not self.T > 0:
            raise ValueError("need nonnegative constants and positive T")


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a grid condition check."""

    passed: bool
    max_violation: float
    witness: tuple[float, ...]


@dataclass(frozen=True)
class AppendixBReport:
    """Hypothesis/conclusion pair for the inverse-product implications."""

    variant: str
    hypothesis: ConditionReport
    conclusion: ConditionReport | None = field(default=None)

    @property
    def passed(self) -> bool:
        if not self.hypothesis.passed:
            return False
        return self.conclusion is None or self.conclusion.passed


def probe_axis(T: float, n: int) -> np.ndarray:
    """Mixed log+linear probe grid on [0, T]; log points crowd the origin
    where the Young conditions bind."""
    if math.isinf(T):
        T = DEFAULT_PROBE_T
    n_log = max(n // 2, 4)
    n_lin = max(n - n_log, 4)
    pts = np.concatenate(
        (
            [0.0],
            np.geomspace(T * 1e-8, T, n_log),
            np.linspace(0.0, T, n_lin),
        )
    )
    return np.unique(pts)


def verify_tri_condition(
    phi0: YoungFunction,
    phi1: YoungFunction,
    phi2: YoungFunction,
    cond: TriYoungCondition,
    probes: int = 24,
) -> ConditionReport:
    """Grid check of the three-factor Young condition on [0, T]^3.

    An infinite right-hand side always passes; products with a zero factor
    use the ``inf * 0 = 0`` convention.
    """
    if probes < 16:
        raise ValueError("probes must be at least 16")
    t = probe_axis(cond.T, probes)
    phi0c = conjugate(phi0)
    f0 = np.asarray(phi0c.evaluate(t), dtype=float)
    f1 = np.asarray(phi1.evaluate(t), dtype=float)
    f2 = np.asarray(phi2.evaluate(t), dtype=float)

    t0 = t[:, None, None]
    t1 = t[None, :, None]
    t2 = t[None, None, :]
    lhs = t0 * t1 * t2
    rhs = np.zeros_like(lhs)
    # skip zero-coefficient terms outright so 0 * inf never appears
    if cond.c1:
        rhs = rhs + cond.c1 * ext_mul(f0[:, None, None], f1[None, :, None])
    if cond.c2:
        rhs = rhs + cond.c2 * ext_mul(f0[:, None, None], f2[None, None, :])
    if cond.c0:
        rhs = rhs + cond.c0 * ext_mul(f1[None, :, None], f2[None, None, :])
    with np.errstate(invalid="ignore"):
        viol = lhs - rhs
    viol = np.where(np.isinf(rhs), -np.inf, viol)
    k = np.unravel_index(np.argmax(viol), viol.shape)
    raw = float(viol[k])
    return ConditionReport(
        passed=raw <= CONDITION_SLACK,
        max_violation=max(raw, 0.0),
        witness=(float(t[k[0]]), float(t[k[1]]), float(t[k[2]])),
    )


def verify_multilinear_condition(
    phis: list[YoungFunction],
    cond: MultiYoungCondition,
    probes: int = 10,
) -> ConditionReport:
    """Grid check of the N+1-variable Young condition on [0, T]^(N+1).

    Supports N in {2, 3}; at N = 2 this is the three-factor condition with
    the coefficients c1, c2 attached to the products omitting phi1, phi2
    respectively (so it matches :func:`verify_tri_condition` whenever
    c1 = c2).
    """
    N = cond.N
    if N not in (2, 3):
        raise ValueError("only N in {2, 3} is supported (grid size)")
    if len(phis) != N + 1:
        raise ValueError("need N+1 Young functions")
    if probes < 8:
        raise ValueError("probes must be at least 8")
    t = probe_axis(cond.T, probes)
    vals = [np.asarray(p.evaluate(t), dtype=float) for p in phis]
    f0c = np.asarray(conjugate(phis[0]).evaluate(t), dtype=float)

    shape = (t.size,) * (N + 1)

    def ax(v: np.ndarray, axis: int) -> np.ndarray:
        sl = [None] * (N + 1)
        sl[axis] = slice(None)
        return v[tuple(sl)]

    lhs = np.ones(shape)
    for axis in range(N + 1):
        lhs = lhs * ax(t, axis)

    bracket = np.zeros(shape)
    for j in range(1, N + 1):
        if cond.c[j] == 0.0:
            continue
        term = np.ones(shape)
        for m in range(1, N + 1):
            if m == j:
                continue
            term = ext_mul(term, ax(vals[m], m))
        bracket = bracket + cond.c[j] * term
    rhs = ext_mul(bracket, ax(f0c, 0))
    if cond.c[0]:
        prod_all = np.ones(shape)
        for j in range(1, N + 1):
            prod_all = ext_mul(prod_all, ax(vals[j], j))
        rhs = rhs + cond.c[0] * prod_all

    with np.errstate(invalid="ignore"):
        viol = lhs - rhs
    viol = np.where(np.isinf(rhs), -np.inf, viol)
    k = np.unravel_index(np.argmax(viol), viol.shape)
    raw = float(viol[k])
    return ConditionReport(
        passed=raw <= CONDITION_SLACK,
        max_violation=max(raw, 0.0),
        witness=tuple(float(t[i]) for i in k),
    )


def conjugate_exponent(p: float) -> float:
    """p' with 1/p + 1/p' = 1 on [1, inf]."""
    if p < 1:
        raise ValueError("exponent must lie in [1, inf]")
    if p == 1.0:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


def phi_for_exponent(p: float) -> YoungFunction:
    """The Young function realizing l^p: t**p for finite p, indicator for inf."""
    return IndicatorYoung() if math.isinf(p) else PowerYoung(p)


def lebesgue_constants(p0: float, p1: float, p2: float) -> TriYoungCondition:
    """Valid constants for the Lebesgue triple phi_j = t**p_j.

    Requires the Young relation 1/p1 + 1/p2 = 1 + 1/p0.  Weighted AM-GM on
    u = t0**p0', v = t1**p1, w = t2**p2 gives

        t0 t1 t2 <= (1/p2') u v + (1/p1') u w + (1/p0) v w,

    i.e. the coefficient of each two-factor product is indexed by the
    *omitted* exponent; so c1 = 1/p2' and c2 = 1/p1'.  T is the +inf
    sentinel except for the endpoint triples whose validity needs the
    indicator factor to vanish (those hold on [0, 1] only).
    """
    for p in (p0, p1, p2):
        if p < 1:
            raise ValueError("exponents must lie in [1, inf]")
    inv = lambda p: 0.0 if math.isinf(p) else 1.0 / p
    if abs(inv(p1) + inv(p2) - 1.0 - inv(p0)) > 1e-12:
        raise ValueError("Young relation 1/p1 + 1/p2 = 1 + 1/p0 violated")
    c0 = inv(p0)
    c1 = inv(conjugate_exponent(p2))
    c2 = inv(conjugate_exponent(p1))
    local = p0 == 1.0 or math.isinf(p1) or math.isinf(p2)
    return TriYoungCondition(c0=c0, c1=c1, c2=c2, T=1.0 if local else math.inf)


def appendix_b_checks(
    phis: list[YoungFunction],
    C: float,
    s_max: float,
    probes: int = 24,
    variant: str = "power",
) -> AppendixBReport:
    """Check an inverse-product hypothesis and, if it holds, its implication.

    ``variant="power"``: hypothesis  prod_j phi_j^{-1}(s) <= C s^(N-1)
    phi0^{-1}(s)  on a log grid of (0, s_max]; implied inequality is the
    (N+1)-variable bound with constant C over all size-(N-1) subsets,

        t0 t1 .. tN <= C (phi0*(t0) sum_{|K|=N-1} prod_{j in K} phi_j(t_j)
                          + prod_j phi_j(t_j)).

    ``variant="holder"``: hypothesis  prod_j phi_j^{-1}(s) <= phi0^{-1}(s)
    (the constant C is not used); implied inequality is
    phi0(t1 .. tN) <= max_j phi_j(t_j) <= sum_j phi_j(t_j).

    The conclusion is only evaluated when the hypothesis passes.
    """
    if variant not in ("power", "holder"):
        raise ValueError("variant must be 'power' or 'holder'")
    N = len(phis) - 1
    if N not in (2, 3):
        raise ValueError("only N in {2, 3} is supported")
    if not (C > 0 and s_max > 0):
        raise ValueError("C and s_max must be positive")

    s = np.geomspace(s_max * 1e-8, s_max, max(probes, 16) ** 2)
    invs = [np.array([inverse(p, float(x)) for x in s]) for p in phis]
    lhs = np.prod(np.stack(invs[1:]), axis=0)
    if variant == "power":
        rhs = C * s ** (N - 1) * invs[0]
    else:
        rhs = invs[0]
    viol = lhs - rhs
    viol = np.where(np.isinf(rhs), -np.inf, viol)
    k = int(np.argmax(viol))
    raw = float(viol[k])
    hypothesis = ConditionReport(
        passed=raw <= CONDITION_SLACK,
        max_violation=max(raw, 0.0),
        witness=(float(s[k]),),
    )
    if not hypothesis.passed:
        return AppendixBReport(variant=variant, hypothesis=hypothesis)

    caps = [min(inverse(p, s_max), DEFAULT_PROBE_T) for p in phis[1:]]
    if variant == "power":
        conclusion = _power_conclusion(phis, C, s_max, probes, caps)
    else:
        conclusion = _holder_conclusion(phis, probes, caps)
    return AppendixBReport(variant=variant, hypothesis=hypothesis, conclusion=conclusion)


def _power_conclusion(phis, C, s_max, probes, caps) -> ConditionReport:
    from itertools import combinations

    N = len(phis) - 1
    phi0c = conjugate(phis[0])
    cap0 = min(inverse(phi0c, s_max), DEFAULT_PROBE_T)
    axes = [probe_axis(cap0, probes)] + [probe_axis(c, probes) for c in caps]
    vals = [np.asarray(phi0c.evaluate(axes[0]), dtype=float)] + [
        np.asarray(p.evaluate(a), dtype=float) for p, a in zip(phis[1:], axes[1:])
    ]
    shape = tuple(a.size for a in axes)

    def ax(v, axis):
        sl = [None] * (N + 1)
        sl[axis] = slice(None)
        return v[tuple(sl)]

    lhs = np.ones(shape)
    for axis in range(N + 1):
        lhs = lhs * ax(axes[axis], axis)
    subset_sum = np.zeros(shape)
    for K in combinations(range(1, N + 1), N - 1):
        term = np.ones(shape)
        for j in K:
            term = ext_mul(term, ax(vals[j], j))
        subset_sum = subset_sum + term
    prod_all = np.ones(shape)
    for j in range(1, N + 1):
        prod_all = ext_mul(prod_all, ax(vals[j], j))
    rhs = C * (ext_mul(ax(vals[0], 0), subset_sum) + prod_all)
    with np.errstate(invalid="ignore"):
        viol = lhs - rhs
    viol = np.where(np.isinf(rhs), -np.inf, viol)
    k = np.unravel_index(np.argmax(viol), viol.shape)
    raw = float(viol[k])
    return ConditionReport(
        passed=raw <= CONDITION_SLACK,
        max_violation=max(raw, 0.0),
        witness=tuple(float(axes[i][k[i]]) for i in range(N + 1)),
    )


def _holder_conclusion(phis, probes, caps) -> ConditionReport:
    N = len(phis) - 1
    axes = [probe_axis(c, probes) for c in caps]
    vals = [np.asarray(p.evaluate(a), dtype=float) for p, a in zip(phis[1:], axes)]
    shape = tuple(a.size for a in axes)

    def ax(v, axis):
        sl = [None] * N
        sl[axis] = slice(None)
        return v[tuple(sl)]

    prod_t = np.ones(shape)
    for axis in range(N):
        prod_t = prod_t * ax(axes[axis], axis)
    lhs = np.asarray(phis[0].evaluate(prod_t), dtype=float)
    rhs = ax(vals[0], 0)
    for j in range(1, N):
        rhs = np.maximum(rhs, ax(vals[j], j))
    rhs = np.broadcast_to(rhs, shape)
    with np.errstate(invalid="ignore"):
        viol = lhs - rhs
    viol = np.where(np.isinf(rhs), -np.inf, viol)
    viol = np.where(np.isinf(lhs) & np.isinf(rhs), -np.inf, viol)
    k = np.unravel_index(np.argmax(viol), viol.shape)
    raw = float(viol[k])
    return ConditionReport(
        passed=raw <= CONDITION_SLACK,
        max_violation=max(raw, 0.0),
        witness=tuple(float(axes[i][k[i]]) for i in range(N)),
    )


YOUNG_GRAMMAR = (
    "Young-function specs: 'p:<real>' (power t**p, p >= 1), "
    "'pinf' (0 on [0,1], inf beyond), 'exp' (e^t - 1), 'exp1' (e^t - 1 - t). "
    "Tags are case-sensitive."
)


def parse_young(spec: str) -> YoungFunction:
    """Parse the CLI/config mini-language; unknown tags raise ValueError."""
    if spec == "pinf":
        return IndicatorYoung()
    if spec == "exp":
        return ExpYoung()
    if spec == "exp1":
        return ExpMinusOneMinusT()
    if spec.startswith("p:"):
        try:
            p = float(spec[2:])
        except ValueError:
            raise ValueError(f"bad power exponent in {spec!r}. {YOUNG_GRAMMAR}") from None
        return PowerYoung(p)
    raise ValueError(f"unknown Young spec {spec!r}. {YOUNG_GRAMMAR}")


def format_young(phi: YoungFunction) -> str:
    if isinstance(phi, PowerYoung):
        return f"p:{phi.p:g}"
    if isinstance(phi, IndicatorYoung):
        return "pinf"
    if isinstance(phi, ExpYoung):
        return "exp"
    if isinstance(phi, ExpMinusOneMinusT):
        return "exp1"
    if isinstance(phi, QuasiYoungFunction):
        return f"quasi(r={phi.order_r:g},{format_young(phi.base)})"
    if isinstance(phi, NumericConjugate):
        return f"conj({format_young(phi.base)})"
    return phi.__class__.__name__
