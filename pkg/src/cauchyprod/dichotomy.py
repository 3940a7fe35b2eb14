"""Classification of parameter sequences: equivalent vs. singular products.

The decision rule is the convergence dichotomy for the series ``sum chi_n``
over a sequence of parameter pairs: a finite sum means the two infinite
product measures are equivalent, a divergent sum means they are mutually
singular.  For the declared families below the verdict is analytic:

  * explicit finite lists (equal tails declared): finitely many nonzero
    terms, always Equivalent;
  * power laws ``chi_n = c * n**(-p)``: Equivalent iff ``c = 0`` or ``p > 1``;
  * geometric ``chi_n = c * r**n`` with ``0 < r < 1``: Equivalent;
  * constants ``chi_n = c``: Singular for ``c > 0``, Equivalent for ``c = 0``.

Callback-backed sequences carry no analytic tail information, so they are
Inconclusive unless the caller has declared them monotone unbounded and the
observed terms actually blow up, in which case boundedness is violated and
the verdict is Singular.  Numeric trend heuristics never override analytics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .divergence import kakutani_from_chi
from .halfplane import UHPoint, canonical_lambda, chi
from .numerics import (
    SumDiagnostics,
    TREND_GROWING,
    TREND_PLATEAUING,
    partial_sum_diagnostics,
)

__all__ = [
    "ParamSequencePair",
    "DichotomyReport",
    "KakutaniComparison",
    "chi_sequence",
    "classify",
    "equivalent_iff_kakutani",
    "concrete_pairs",
    "location_embedding",
    "scale_embedding",
    "VERDICT_EQUIVALENT",
    "VERDICT_SINGULAR",
    "VERDICT_INCONCLUSIVE",
    "BASIS_ANALYTIC",
    "BASIS_BOUNDEDNESS",
    "BASIS_HEURISTIC",
    "KIND_EXPLICIT",
    "KIND_POWER_LAW",
    "KIND_GEOMETRIC",
    "KIND_CONSTANT",
    "KIND_CALLBACK",
    "TAIL_EQUAL_AFTER_N",
    "TAIL_CONTINUES",
    "DEFAULT_N_MAX",
    "REPORT_TERM_LIMIT",
]

VERDICT_EQUIVALENT = "Equivalent"
VERDICT_SINGULAR = "Singular"
VERDICT_INCONCLUSIVE = "Inconclusive"

BASIS_ANALYTIC = "Analytic"
BASIS_BOUNDEDNESS = "BoundednessViolation"
BASIS_HEURISTIC = "NumericHeuristic"

KIND_EXPLICIT = "explicit"
KIND_POWER_LAW = "powerlaw"
KIND_GEOMETRIC = "geometric"
KIND_CONSTANT = "constant"
KIND_CALLBACK = "callback"

TAIL_EQUAL_AFTER_N = "equal_after_n"
TAIL_CONTINUES = "continues"

DEFAULT_N_MAX = 1 << 16
MIN_N = 16

# Reports keep only this many leading terms of per-n arrays; sums and
# diagnostics always use the full horizon.
REPORT_TERM_LIMIT = 1024

DEFAULT_UNBOUNDED_THRESHOLD = 1e3

_KINDS = (KIND_EXPLICIT, KIND_POWER_LAW, KIND_GEOMETRIC, KIND_CONSTANT, KIND_CALLBACK)


def _require_nonneg(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value >= 0.0):
        raise ValueError(f"{name} must be finite and non-negative, got {value!r}")
    return value


@dataclass(frozen=True)
class ParamSequencePair:
    """A sequence of Cauchy parameter pairs with a declared tail.

    Use the constructors :meth:`explicit`, :meth:`power_law`,
    :meth:`geometric`, :meth:`constant`, or :meth:`from_callback`; the bare
    dataclass fields exist for round-tripping and validation.

    ``tail`` makes the behavior beyond the described range explicit: an
    explicit list must declare the members equal afterwards
    (``TAIL_EQUAL_AFTER_N``), families and callbacks continue indefinitely
    (``TAIL_CONTINUES``).  There is no silent default beyond that.
    """

    kind: str
    pairs: tuple[tuple[UHPoint, UHPoint], ...] = ()
    c: float = 0.0
    p: float = 0.0
    r: float = 0.5
    chi_fn: Callable[[int], float] | None = field(default=None, compare=False)
    n_available: int | None = None
    tail: str = TAIL_CONTINUES
    monotone_unbounded: bool = False

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == KIND_EXPLICIT:
            if self.tail != TAIL_EQUAL_AFTER_N:
                raise ValueError("explicit sequences must declare tail equal_after_n")
            for entry in self.pairs:
                z, w = entry
                if not (isinstance(z, UHPoint) and isinstance(w, UHPoint)):
                    raise ValueError("pairs must contain UHPoint pairs")
        else:
            if self.tail != TAIL_CONTINUES:
                raise ValueError(f"{self.kind} sequences continue; tail must say so")
            if self.pairs:
                raise ValueError(f"{self.kind} sequences carry no explicit pairs")
        if self.kind == KIND_POWER_LAW:
            _require_nonneg("c", self.c)
            if not math.isfinite(self.p):
                raise ValueError("p must be finite")
        elif self.kind == KIND_GEOMETRIC:
            _require_nonneg("c", self.c)
            if not (math.isfinite(self.r) and 0.0 < self.r < 1.0):
                raise ValueError(f"r must lie strictly inside (0, 1), got {self.r!r}")
        elif self.kind == KIND_CONSTANT:
            _require_nonneg("c", self.c)
        elif self.kind == KIND_CALLBACK:
            if not callable(self.chi_fn):
                raise ValueError("callback sequences need a callable chi_fn")
            if self.n_available is not None and self.n_available < 1:
                raise ValueError("n_available must be at least 1 when given")
        if self.kind != KIND_CALLBACK and self.monotone_unbounded:
            raise ValueError("monotone_unbounded applies to callback sequences only")

    @classmethod
    def explicit(cls, pairs) -> "ParamSequencePair":
        """Finitely many concrete pairs, equal members afterwards."""
        return cls(
            kind=KIND_EXPLICIT,
            pairs=tuple((z, w) for z, w in pairs),
            tail=TAIL_EQUAL_AFTER_N,
        )

    @classmethod
    def power_law(cls, c: float, p: float) -> "ParamSequencePair":
        """``chi_n = c * n**(-p)``."""
        return cls(kind=KIND_POWER_LAW, c=float(c), p=float(p))

    @classmethod
    def geometric(cls, c: float, r: float) -> "ParamSequencePair":
        """``chi_n = c * r**n`` with 0 < r < 1."""
        return cls(kind=KIND_GEOMETRIC, c=float(c), r=float(r))

    @classmethod
    def constant(cls, c: float) -> "ParamSequencePair":
        """``chi_n = c`` for every n."""
        return cls(kind=KIND_CONSTANT, c=float(c))

    @classmethod
    def from_callback(
        cls,
        chi_fn: Callable[[int], float],
        n_available: int | None = None,
        monotone_unbounded: bool = False,
    ) -> "ParamSequencePair":
        """An opaque generator of chi values, indexed from n = 1.

        ``n_available`` caps the usable range (e.g. tabulated observations);
        ``monotone_unbounded`` is the caller's declaration that the values
        grow without bound, which is what licenses a Singular verdict from
        observed blow-up.
        """
        return cls(
            kind=KIND_CALLBACK,
            chi_fn=chi_fn,
            n_available=None if n_available is None else int(n_available),
            monotone_unbounded=bool(monotone_unbounded),
        )


@dataclass(frozen=True, eq=False)
class DichotomyReport:
    """Outcome of :func:`classify`.

    ``chi_terms``, ``lambda_terms``, and ``chain_audit`` keep at most
    ``REPORT_TERM_LIMIT`` leading entries; ``partial_sums`` always reflects the
    full horizon (``n_terms``).  Each ``chain_audit`` row is
    ``(kakutani_term, kl/2, chi/8)`` and is non-decreasing left to right up to
    a 1e-12 slack.
    """

    verdict: str
    basis: str
    n_terms: int
    chi_terms: np.ndarray
    partial_sums: SumDiagnostics
    chain_audit: np.ndarray
    lambda_terms: np.ndarray
    suggestion: str | None = None

    def to_dict(self) -> dict:
        """JSON-ready representation (schema cauchy-dichotomy-report/1)."""
        diag = self.partial_sums
        return {
            "schema": "cauchy-dichotomy-report/1",
            "verdict": self.verdict,
            "basis": self.basis,
            "n_terms": self.n_terms,
            "suggestion": self.suggestion,
            "partial_sums": {
                "horizon": diag.horizon,
                "quarter_sum": diag.quarter_sum,
                "half_sum": diag.half_sum,
                "full_sum": diag.full_sum,
                "tail_ratio": diag.tail_ratio,
                "trend": diag.trend,
            },
            "chi_terms": [float(v) for v in self.chi_terms],
            "lambda_terms": [float(v) for v in self.lambda_terms],
            "chain_audit": [[float(v) for v in row] for row in self.chain_audit],
        }


@dataclass(frozen=True)
class KakutaniComparison:
    """Cross-validation record from :func:`equivalent_iff_kakutani`.

    The Kakutani series ``sum -log(affinity_n)`` and the dominating series
    ``sum chi_n / 8`` converge or diverge together; the record carries both
    truncated-sum diagnostics and whether their trend labels agree.
    """

    kakutani_diag: SumDiagnostics
    chi_over_8_diag: SumDiagnostics
    trends_agree: bool


def chi_sequence(seq: ParamSequencePair, n_max: int) -> np.ndarray:
    """The values ``chi_n`` for n = 1..n_max as a float array.

    Explicit sequences are zero-padded beyond their list (equal members give
    chi = 0).  Callback sequences with ``n_available`` set are clamped to that
    length, so the result can be shorter than ``n_max``; all other kinds
    return exactly ``n_max`` terms.

    Raises:
        ValueError: for n_max < 1 or a callback producing negative or
            non-finite values.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if seq.kind == KIND_EXPLICIT:
        out = np.zeros(n_max)
        for i, (z, w) in enumerate(seq.pairs[:n_max]):
            out[i] = chi(z, w)
        return out
    if seq.kind == KIND_POWER_LAW:
        n = np.arange(1, n_max + 1, dtype=float)
        return seq.c * n ** (-seq.p)
    if seq.kind == KIND_GEOMETRIC:
        n = np.arange(1, n_max + 1, dtype=float)
        return seq.c * seq.r**n
    if seq.kind == KIND_CONSTANT:
        return np.full(n_max, seq.c)
    limit = n_max if seq.n_available is None else min(n_max, seq.n_available)
    values = np.array([float(seq.chi_fn(n)) for n in range(1, limit + 1)])
    if values.size and (not np.all(np.isfinite(values)) or np.any(values < 0.0)):
        raise ValueError("callback produced a negative or non-finite chi value")
    return values


def location_embedding(chi_n: float) -> tuple[UHPoint, UHPoint]:
    """The pair ``(sqrt(chi_n) + i, i)`` realizing a given chi by a location shift."""
    return UHPoint(math.sqrt(_require_nonneg("chi_n", chi_n)), 1.0), UHPoint(0.0, 1.0)


def scale_embedding(chi_n: float) -> tuple[UHPoint, UHPoint]:
    """The pair ``(i, lam*i)`` realizing a given chi by a pure scale change."""
    lam = canonical_lambda(_require_nonneg("chi_n", chi_n))
    return UHPoint(0.0, 1.0), UHPoint(0.0, lam)


_EMBEDDINGS = {"location": location_embedding, "scale": scale_embedding}


def concrete_pairs(
    seq: ParamSequencePair, n: int, embedding: str = "location"
) -> list[tuple[UHPoint, UHPoint]]:
    """Materialize ``(z_n, w_n)`` for n = 1..n; family chis go through an embedding.

    Explicit sequences keep their own pairs and pad the declared-equal tail
    with a coincident pair.  Both embeddings reproduce the requested chi
    exactly up to roundoff.

    Raises:
        ValueError: for an unknown embedding name, or a callback sequence
            whose ``n_available`` cannot cover ``n``.
    """
    if embedding not in _EMBEDDINGS:
        raise ValueError(f"unknown embedding {embedding!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if seq.kind == KIND_EXPLICIT:
        anchor = (UHPoint(0.0, 1.0), UHPoint(0.0, 1.0))
        listed = list(seq.pairs[:n])
        return listed + [anchor] * (n - len(listed))
    values = chi_sequence(seq, n)
    if values.size < n:
        raise ValueError(
            f"sequence provides only {values.size} terms, cannot materialize {n}"
        )
    embed = _EMBEDDINGS[embedding]
    return [embed(float(v)) for v in values]


def _analytic_verdict(seq: ParamSequencePair) -> tuple[str, str] | None:
    if seq.kind == KIND_EXPLICIT:
        return VERDICT_EQUIVALENT, BASIS_ANALYTIC
    if seq.kind == KIND_POWER_LAW:
        if seq.c == 0.0 or seq.p > 1.0:
            return VERDICT_EQUIVALENT, BASIS_ANALYTIC
        return VERDICT_SINGULAR, BASIS_ANALYTIC
    if seq.kind == KIND_GEOMETRIC:
        return VERDICT_EQUIVALENT, BASIS_ANALYTIC
    if seq.kind == KIND_CONSTANT:
        if seq.c > 0.0:
            return VERDICT_SINGULAR, BASIS_ANALYTIC
        return VERDICT_EQUIVALENT, BASIS_ANALYTIC
    return None


def classify(
    seq: ParamSequencePair,
    n_max: int = DEFAULT_N_MAX,
    unbounded_threshold: float = DEFAULT_UNBOUNDED_THRESHOLD,
) -> DichotomyReport:
    """Decide equivalence vs. singularity for a declared sequence.

    Declared families receive their analytic verdict; numeric diagnostics are
    attached for audit but never override it.  Callback sequences are
    Inconclusive unless declared monotone unbounded *and* observed above
    ``unbounded_threshold`` with a growing sum trend, which violates the
    boundedness any equivalent pair sequence must satisfy and yields Singular.

    The verdict is invariant under applying one determinant-one map to every
    pair (chi is) and under swapping the members of every pair (chi is
    symmetric).

    Args:
        seq: the sequence description.
        n_max: diagnostic horizon, at least 16 (default 2**16).
        unbounded_threshold: observed-chi level above which a declared
            monotone-unbounded callback counts as actually unbounded.

    Raises:
        ValueError: for n_max < 16 or a sequence providing fewer than 16 terms.
    """
    if n_max < MIN_N:
        raise ValueError(f"n_max must be at least {MIN_N}")
    terms = chi_sequence(seq, n_max)
    n_terms = int(terms.size)
    if n_terms < MIN_N:
        raise ValueError(f"sequence provides only {n_terms} terms; need {MIN_N}")
    diag = partial_sum_diagnostics(terms, n_terms)
    head = terms[:REPORT_TERM_LIMIT]
    audit = np.column_stack(
        [
            np.asarray(kakutani_from_chi(head), dtype=float),
            0.5 * np.log1p(0.25 * head),
            0.125 * head,
        ]
    )
    lam = np.asarray(canonical_lambda(head), dtype=float)
    suggestion = None
    analytic = _analytic_verdict(seq)
    if analytic is not None:
        verdict, basis = analytic
    elif (
        seq.monotone_unbounded
        and float(terms.max()) > unbounded_threshold
        and diag.trend == TREND_GROWING
    ):
        verdict, basis = VERDICT_SINGULAR, BASIS_BOUNDEDNESS
    else:
        verdict, basis = VERDICT_INCONCLUSIVE, BASIS_HEURISTIC
        if diag.trend == TREND_GROWING:
            suggestion = VERDICT_SINGULAR
        elif diag.trend == TREND_PLATEAUING:
            suggestion = VERDICT_EQUIVALENT
    return DichotomyReport(
        verdict=verdict,
        basis=basis,
        n_terms=n_terms,
        chi_terms=head.copy(),
        partial_sums=diag,
        chain_audit=audit,
        lambda_terms=lam,
        suggestion=suggestion,
    )


def equivalent_iff_kakutani(seq: ParamSequencePair, n_max: int = DEFAULT_N_MAX) -> KakutaniComparison:
    """Cross-validate the chi series against the Kakutani series.

    Both ``sum chi_n / 8`` and ``sum -log(affinity_n)`` decide the same
    dichotomy; this harness runs the truncated-sum diagnostics on each and
    reports whether the trend labels coincide.  It is a validation device,
    not a user-facing decision procedure.
    """
    terms = chi_sequence(seq, n_max)
    if terms.size < MIN_N:
        raise ValueError(f"sequence provides only {terms.size} terms; need {MIN_N}")
    horizon = int(terms.size)
    kak = np.asarray(kakutani_from_chi(terms), dtype=float)
    kak_diag = partial_sum_diagnostics(kak, horizon)
    chi_diag = partial_sum_diagnostics(0.125 * terms, horizon)
    return KakutaniComparison(kak_diag, chi_diag, kak_diag.trend == chi_diag.trend)
