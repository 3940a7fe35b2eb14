"""Reusable numeric kernels: AGM, adaptive real-line quadrature, series diagnostics.

The quadrature engine is a classic adaptive Gauss-Kronrod 7/15 scheme.  For
whole-line integrals the substitution ``x = tan(u)`` maps the problem onto the
bounded interval (-pi/2, pi/2) with weight ``1 + tan(u)**2``, so integrands
that decay like ``1/x**2`` (every density-type integrand in this package)
become bounded and smooth.  Subdivision always splits the panel with the
largest error estimate, ties broken by insertion order, and the final value is
a compensated sum over panels sorted by position -- results are therefore
reproducible run to run and independent of how panels might be evaluated.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "QuadratureResult",
    "SumDiagnostics",
    "agm",
    "integrate_interval",
    "integrate_real_line",
    "partial_sum_diagnostics",
    "TREND_PLATEAUING",
    "TREND_GROWING",
    "TREND_INDETERMINATE",
]

AGM_RTOL = 1e-15
_AGM_MAX_ITER = 64

TREND_PLATEAUING = "plateauing"
TREND_GROWING = "growing"
TREND_INDETERMINATE = "indeterminate"

# Tail-increment ratio cutoffs.  Terms ~ n**-p drive the ratio to 2**(1 - p)
# (0.5 at p = 2, 1.0 at p = 1); geometric tails drive it to 0.
PLATEAU_RATIO = 0.6
GROWING_RATIO = 0.85
_TINY_INCREMENT = 1e-300

# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half, center last).
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# Full 15-point tables ordered left to right; the Gauss-7 subset sits at the
# odd positions.
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KW = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GW = np.zeros(15)
_GW[1::2] = np.concatenate([_WG[:-1], _WG[::-1]])


@dataclass(frozen=True)
class QuadratureResult:
    """Value, error estimate, and cost of one adaptive integration.

    ``abs_error_estimate`` is the summed Gauss/Kronrod discrepancy over the
    final panel set; a value above the requested tolerance means the
    evaluation budget ran out before the target was met.
    """

    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self) -> None:
        if not (self.abs_error_estimate >= 0.0):
            raise ValueError("abs_error_estimate must be non-negative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be at least 1")


@dataclass(frozen=True)
class SumDiagnostics:
    """Partial sums of a non-negative series at three nested horizons.

    ``tail_ratio`` is (S_full - S_half) / (S_half - S_quarter), or None when
    the denominator vanishes; ``trend`` is one of the TREND_* labels.  The
    trend is a finite-horizon heuristic only and never substitutes for an
    analytic convergence statement.
    """

    horizon: int
    quarter_sum: float
    half_sum: float
    full_sum: float
    tail_ratio: float | None
    trend: str


def agm(a, b):
    """Arithmetic-geometric mean of positive values (scalars or arrays).

    Iterates (a, b) -> ((a + b)/2, sqrt(a*b)) until ``|a - b| <= 1e-15 * a``;
    convergence is quadratic, so even ratios near 1e300 settle within a few
    dozen sweeps.  The result lies between min and max of the inputs, and the
    function is symmetric and homogeneous: ``agm(k*a, k*b) = k * agm(a, b)``.

    Raises:
        ValueError: if any input is non-positive or not finite.
    """
    x = np.asarray(a, dtype=float)
    y = np.asarray(b, dtype=float)
    scalar = x.ndim == 0 and y.ndim == 0
    x, y = np.broadcast_arrays(x, y)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("agm requires finite inputs")
    if np.any(x <= 0.0) or np.any(y <= 0.0):
        raise ValueError("agm requires strictly positive inputs")
    hi = np.maximum(x, y).astype(float, copy=True)
    lo = np.minimum(x, y).astype(float, copy=True)
    for _ in range(_AGM_MAX_ITER):
        if np.all(hi - lo <= AGM_RTOL * hi):
            break
        # sqrt(hi)*sqrt(lo) rather than sqrt(hi*lo): immune to overflow.
        hi, lo = 0.5 * (hi + lo), np.sqrt(hi) * np.sqrt(lo)
    else:  # pragma: no cover - unreachable for finite positive input
        raise RuntimeError("agm failed to converge")
    out = 0.5 * (hi + lo)
    if scalar:
        return float(out)
    return out


def _gk15(f: Callable, a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod 7/15 pass over [a, b]; returns (value, error estimate)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y = np.asarray(f(mid + half * _NODES), dtype=float)
    if y.shape != _NODES.shape:
        raise ValueError("integrand must map an ndarray to an ndarray of the same shape")
    kron = half * float(_KW @ y)
    gauss = half * float(_GW @ y)
    return kron, abs(kron - gauss)


def integrate_interval(
    f: Callable,
    a: float,
    b: float,
    tol: float = 1e-10,
    max_evals: int = 1_000_000,
    initial_panels: int = 8,
) -> QuadratureResult:
    """Adaptively integrate a vectorized integrand over the finite interval [a, b].

    Args:
        f: callable mapping an ndarray of abscissae to an ndarray of values.
        a, b: finite endpoints, a < b.
        tol: absolute target for the summed error estimate.
        max_evals: hard budget on integrand evaluations; when exhausted the
            best available estimate is returned with its (above-tol) error.
        initial_panels: uniform panels laid down before adaptation starts.

    Returns:
        QuadratureResult; check ``abs_error_estimate <= tol`` for success.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ValueError("need finite endpoints with a < b")
    if not (tol > 0.0):
        raise ValueError("tol must be positive")
    if initial_panels < 1:
        raise ValueError("initial_panels must be at least 1")
    edges = np.linspace(a, b, initial_panels + 1)
    heap: list[tuple[float, int, float, float, float]] = []
    serial = 0
    evaluations = 0
    total_err = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        value, err = _gk15(f, float(left), float(right))
        evaluations += 15
        heapq.heappush(heap, (-err, serial, float(left), float(right), value))
        serial += 1
        total_err += err
    while total_err > tol and evaluations + 30 <= max_evals:
        neg_err, _, left, right, panel_value = heapq.heappop(heap)
        total_err += neg_err
        mid = 0.5 * (left + right)
        if not (left < mid < right):
            # Panel already at floating-point resolution; put it back and stop.
            heapq.heappush(heap, (neg_err, serial, left, right, panel_value))
            serial += 1
            total_err -= neg_err
            break
        for lo, hi in ((left, mid), (mid, right)):
            value, err = _gk15(f, lo, hi)
            evaluations += 15
            heapq.heappush(heap, (-err, serial, lo, hi, value))
            serial += 1
            total_err += err
    panels = sorted(heap, key=lambda p: p[2])
    value = math.fsum(p[4] for p in panels)
    err = math.fsum(-p[0] for p in panels)
    return QuadratureResult(value, err, evaluations)


def integrate_real_line(
    f: Callable, tol: float = 1e-10, max_evals: int = 1_000_000
) -> QuadratureResult:
    """Integrate a vectorized integrand over the whole real line.

    Applies ``x = tan(u)`` and integrates over (-pi/2, pi/2); the weight
    ``1 + x**2`` keeps density-type integrands bounded near the ends.  Same
    budget semantics as :func:`integrate_interval`.
    """

    def transformed(u: np.ndarray) -> np.ndarray:
        x = np.tan(u)
        return np.asarray(f(x), dtype=float) * (1.0 + x * x)

    return integrate_interval(
        transformed, -0.5 * math.pi, 0.5 * math.pi, tol=tol, max_evals=max_evals
    )


def partial_sum_diagnostics(terms, horizon: int) -> SumDiagnostics:
    """Summarize the growth of a non-negative series truncated at ``horizon``.

    Records partial sums at horizon/4, horizon/2, and horizon, and labels the
    trend from the tail-increment ratio: below ``PLATEAU_RATIO`` the series
    behaves like a convergent tail (geometric decay gives ~0, terms ~ 1/n**2
    give ~0.5), above ``GROWING_RATIO`` like a divergent one (terms ~ 1/n and
    anything slower give ~1).  In between the label is "indeterminate".

    Args:
        terms: sequence of non-negative finite reals, at least ``horizon`` long.
        horizon: truncation point, at least 16.

    Raises:
        ValueError: on a short sequence, negative or non-finite terms, or
            horizon < 16.
    """
    if horizon < 16:
        raise ValueError("horizon must be at least 16")
    arr = np.asarray(terms, dtype=float)
    if arr.ndim != 1:
        raise ValueError("terms must be one-dimensional")
    if arr.size < horizon:
        raise ValueError(f"need at least {horizon} terms, got {arr.size}")
    head = arr[:horizon]
    if not np.all(np.isfinite(head)):
        raise ValueError("terms must be finite")
    if np.any(head < 0.0):
        raise ValueError("terms must be non-negative")
    sums = np.cumsum(head)
    quarter = float(sums[horizon // 4 - 1])
    half = float(sums[horizon // 2 - 1])
    full = float(sums[horizon - 1])
    increment = full - half
    base = half - quarter
    if base > _TINY_INCREMENT:
        ratio: float | None = increment / base
        if ratio < PLATEAU_RATIO:
            trend = TREND_PLATEAUING
        elif ratio > GROWING_RATIO:
            trend = TREND_GROWING
        else:
            trend = TREND_INDETERMINATE
    else:
        ratio = None
        trend = TREND_PLATEAUING if increment <= _TINY_INCREMENT else TREND_INDETERMINATE
    return SumDiagnostics(horizon, quarter, half, full, ratio, trend)
