"""Likelihood-ratio trajectory simulation for product Cauchy measures.

For a pair sequence (z_n, w_n), each trial draws X_n from the w_n law and
accumulates S_N = sum_{n <= N} log(p_{w_n}(X_n) / p_{z_n}(X_n)).  The two
regimes of the dichotomy look very different through S_N:

  * summable chi_n: S_N stabilizes, and the inverse ratio product
    exp(-S_N) = prod p_{z_n}(X_n)/p_{w_n}(X_n) is a mean-one martingale under
    the sampling measure -- its empirical mean sits near 1 at every horizon;
  * non-summable bounded chi_n: S_N drifts upward without bound (each step
    adds a positive KL amount in expectation), while every single increment
    stays inside the analytic bound log(log_ratio_bound(sup chi_n)).

Determinism: trial t uses its own counter-based Philox stream keyed by a
SplitMix64 hash of (seed, t).  Trials are therefore order-independent and
reruns are bit-identical, regardless of how trials might be scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dichotomy import ParamSequencePair, concrete_pairs
from .divergence import log_ratio_bound
from .halfplane import UHPoint, chi

__all__ = [
    "TrajectoryBatch",
    "TrajectorySummary",
    "ExperimentReport",
    "ResourceLimitError",
    "sample_cauchy",
    "simulate_log_ratios",
    "dichotomy_experiment",
    "doubling_increment_medians",
    "default_checkpoints",
    "trial_seeds",
    "MAX_DRAWS",
    "DIVERGENCE_THRESHOLD",
]

MAX_DRAWS = 1_000_000_000

# Reporting threshold (nats) for the "drifted beyond doubt" fraction.
DIVERGENCE_THRESHOLD = 10.0

_MASK64 = (1 << 64) - 1

# Smallest uniform fed to the inverse CDF; random() can return exactly 0.0,
# which the (0, 1) domain excludes.
_MIN_UNIFORM = 2.0**-53


class ResourceLimitError(RuntimeError):
    """Raised when a simulation would exceed the draw budget."""


def _splitmix64(state: int) -> int:
    z = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seeds(seed: int, trials: int) -> tuple[int, ...]:
    """Per-trial 64-bit stream keys derived from the master seed.

    ``seed_t = splitmix64(seed + (t + 1) * golden)``: a pure function of
    (seed, t), so any subset of trials can be reproduced in any order.
    """
    base = int(seed) & _MASK64
    return tuple(
        _splitmix64((base + (t + 1) * 0x9E3779B97F4A7C15) & _MASK64)
        for t in range(trials)
    )


def sample_cauchy(z: UHPoint, u):
    """Inverse-CDF sample of the law of ``z``: location + scale * tan(pi*(u - 1/2)).

    ``u`` must lie strictly inside (0, 1) (scalar or ndarray); the median maps
    from u = 1/2 and the upper quartile from u = 3/4.
    """
    arr = np.asarray(u, dtype=float)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise ValueError("u must lie strictly inside (0, 1)")
    out = z.location + z.scale * np.tan(math.pi * (arr - 0.5))
    if arr.ndim == 0:
        return float(out)
    return out


def default_checkpoints(horizon: int) -> tuple[int, ...]:
    """Logarithmically spaced recording points: powers of two, plus the horizon."""
    points = []
    n = 1
    while n <= horizon:
        points.append(n)
        n *= 2
    if points[-1] != horizon:
        points.append(horizon)
    return tuple(points)


@dataclass(frozen=True, eq=False)
class TrajectorySummary:
    """Per-checkpoint statistics of a trajectory batch.

    ``inverse_ratio_means`` are empirical means of exp(-S_N), the mean-one
    martingale under the sampling measure; ``inverse_ratio_ses`` are their
    standard errors and ``inverse_ratio_medians`` the (heavy-tail-robust)
    medians.  ``frac_above`` counts paths beyond ``threshold`` nats.
    """

    checkpoints: np.ndarray
    medians: np.ndarray
    means: np.ndarray
    frac_above: np.ndarray
    threshold: float
    inverse_ratio_means: np.ndarray
    inverse_ratio_ses: np.ndarray
    inverse_ratio_medians: np.ndarray


@dataclass(frozen=True, eq=False)
class TrajectoryBatch:
    """All recorded state of one simulation run.

    ``log_ratio_paths[t, k]`` is S_N for trial t at checkpoint
    ``checkpoints[k]``; ``max_abs_step[t]`` is the largest single-step
    ``|log ratio|`` the trial ever produced (over all n, not only
    checkpoints).  ``seeds`` are the per-trial stream keys.
    """

    seed: int
    seeds: tuple[int, ...]
    horizon: int
    checkpoints: tuple[int, ...]
    log_ratio_paths: np.ndarray
    max_abs_step: np.ndarray
    summary: TrajectorySummary


def _summarize(
    checkpoints: tuple[int, ...], paths: np.ndarray, threshold: float
) -> TrajectorySummary:
    with np.errstate(over="ignore", under="ignore"):
        inverse = np.exp(-paths)
    trials = paths.shape[0]
    ses = inverse.std(axis=0, ddof=1) / math.sqrt(trials) if trials > 1 else np.zeros(
        paths.shape[1]
    )
    return TrajectorySummary(
        checkpoints=np.asarray(checkpoints, dtype=int),
        medians=np.median(paths, axis=0),
        means=paths.mean(axis=0),
        frac_above=(paths > threshold).mean(axis=0),
        threshold=float(threshold),
        inverse_ratio_means=inverse.mean(axis=0),
        inverse_ratio_ses=np.asarray(ses, dtype=float),
        inverse_ratio_medians=np.median(inverse, axis=0),
    )


def simulate_log_ratios(
    seq,
    trials: int,
    horizon: int,
    seed: int,
    checkpoints: tuple[int, ...] | None = None,
    threshold: float = DIVERGENCE_THRESHOLD,
    embedding: str = "location",
    max_draws: int = MAX_DRAWS,
) -> TrajectoryBatch:
    """Simulate log-ratio trajectories S_N under the w-side product measure.

    Args:
        seq: a ParamSequencePair, or an explicit list of (UHPoint, UHPoint)
            covering at least ``horizon`` entries.
        trials: number of independent trajectories (>= 1).
        horizon: steps per trajectory (>= 1).
        seed: 64-bit master seed; determines everything.
        checkpoints: recording points (sorted, within 1..horizon); defaults to
            powers of two plus the horizon.
        threshold: drift level for the summary's ``frac_above``.
        embedding: how family chi values become pairs ("location" or "scale").
        max_draws: guard on trials * horizon (default 1e9).

    Raises:
        ResourceLimitError: when trials * horizon exceeds ``max_draws``.
        ValueError: on malformed arguments or an undersized pair list.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if trials * horizon > max_draws:
        raise ResourceLimitError(
            f"trials * horizon = {trials * horizon} exceeds the budget {max_draws}"
        )
    if isinstance(seq, ParamSequencePair):
        pairs = concrete_pairs(seq, horizon, embedding=embedding)
    else:
        pairs = list(seq)
        if len(pairs) < horizon:
            raise ValueError(f"need {horizon} pairs, got {len(pairs)}")
        pairs = pairs[:horizon]
    z_loc = np.array([z.location for z, _ in pairs])
    z_sc = np.array([z.scale for z, _ in pairs])
    w_loc = np.array([w.location for _, w in pairs])
    w_sc = np.array([w.scale for _, w in pairs])
    if checkpoints is None:
        checkpoints = default_checkpoints(horizon)
    else:
        checkpoints = tuple(int(n) for n in checkpoints)
        if not checkpoints or any(
            n < 1 or n > horizon for n in checkpoints
        ) or list(checkpoints) != sorted(set(checkpoints)):
            raise ValueError("checkpoints must be sorted, unique, within 1..horizon")
    cp_idx = np.asarray(checkpoints, dtype=int) - 1
    seeds = trial_seeds(seed, trials)
    log_scale = np.log(w_sc) - np.log(z_sc)
    paths = np.empty((trials, len(checkpoints)))
    max_abs_step = np.empty(trials)
    for t in range(trials):
        gen = np.random.Generator(np.random.Philox(key=seeds[t]))
        u = np.maximum(gen.random(horizon), _MIN_UNIFORM)
        x = w_loc + w_sc * np.tan(math.pi * (u - 0.5))
        dz = x - z_loc
        dw = x - w_loc
        steps = log_scale + np.log(dz * dz + z_sc * z_sc) - np.log(dw * dw + w_sc * w_sc)
        sums = np.cumsum(steps)
        paths[t] = sums[cp_idx]
        max_abs_step[t] = float(np.max(np.abs(steps)))
    return TrajectoryBatch(
        seed=int(seed),
        seeds=seeds,
        horizon=horizon,
        checkpoints=checkpoints,
        log_ratio_paths=paths,
        max_abs_step=max_abs_step,
        summary=_summarize(checkpoints, paths, threshold),
    )


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    """Side-by-side simulation of a summable and a non-summable sequence.

    Equivalent branch: per-doubling medians of |S_2N - S_N| (should shrink)
    and the martingale summary inside ``equivalent.summary``.  Singular
    branch: checkpoint medians (should increase), the final median, and the
    analytic per-step bound check.
    """

    equivalent: TrajectoryBatch
    singular: TrajectoryBatch
    increment_checkpoints: tuple[int, ...]
    increment_medians: np.ndarray
    increments_shrinking: bool
    singular_medians_increasing: bool
    singular_final_median: float
    singular_chi_sup: float
    step_bound: float
    max_observed_step: float
    step_bound_satisfied: bool


def doubling_increment_medians(
    batch: TrajectoryBatch,
) -> tuple[tuple[int, ...], np.ndarray]:
    """Medians over trials of |S_2N - S_N| for checkpoints with 2N recorded."""
    cp = list(batch.checkpoints)
    index = {n: k for k, n in enumerate(cp)}
    starts = []
    values = []
    for n in cp:
        if 2 * n in index:
            lo = batch.log_ratio_paths[:, index[n]]
            hi = batch.log_ratio_paths[:, index[2 * n]]
            starts.append(n)
            values.append(float(np.median(np.abs(hi - lo))))
    return tuple(starts), np.asarray(values)


def dichotomy_experiment(
    equivalent_seq,
    singular_seq,
    trials: int,
    horizon: int,
    seed: int,
    embedding: str = "location",
) -> ExperimentReport:
    """Run both regimes and collect the contrast indicators.

    The equivalent branch runs under ``seed`` and the singular branch under
    ``seed + 1`` (distinct Philox key families; no stream is shared).  The
    singular branch's chi supremum feeds the analytic increment bound, which
    is checked against every observed step with no tolerance.
    """
    eq_batch = simulate_log_ratios(
        equivalent_seq, trials, horizon, seed, embedding=embedding
    )
    sg_batch = simulate_log_ratios(
        singular_seq, trials, horizon, (int(seed) + 1) & _MASK64, embedding=embedding
    )
    inc_points, inc_medians = doubling_increment_medians(eq_batch)
    shrinking = bool(inc_medians.size >= 2 and np.all(np.diff(inc_medians) < 0.0))
    sg_medians = sg_batch.summary.medians
    increasing = bool(np.all(np.diff(sg_medians) > 0.0))
    if isinstance(singular_seq, ParamSequencePair):
        sg_pairs = concrete_pairs(singular_seq, horizon, embedding=embedding)
    else:
        sg_pairs = list(singular_seq)[:horizon]
    chi_sup = max(chi(z, w) for z, w in sg_pairs)
    bound = math.log(log_ratio_bound(chi_sup))
    max_step = float(sg_batch.max_abs_step.max())
    return ExperimentReport(
        equivalent=eq_batch,
        singular=sg_batch,
        increment_checkpoints=inc_points,
        increment_medians=inc_medians,
        increments_shrinking=shrinking,
        singular_medians_increasing=increasing,
        singular_final_median=float(sg_medians[-1]),
        singular_chi_sup=float(chi_sup),
        step_bound=bound,
        max_observed_step=max_step,
        step_bound_satisfied=max_step <= bound,
    )
