"""Equivalence vs. mutual singularity of infinite products of Cauchy measures.

The package decides, for two sequences of Cauchy laws, whether the infinite
product measures they generate are equivalent or mutually singular.  The
decision runs through a single scalar invariant of each parameter pair
(:func:`chi`), closed-form divergences expressed in it, a canonical reduction
under the Moebius group, and a likelihood-ratio simulation harness that makes
the dichotomy visible in sampled trajectories.
"""

from .dichotomy import (
    BASIS_ANALYTIC,
    BASIS_BOUNDEDNESS,
    BASIS_HEURISTIC,
    DEFAULT_N_MAX,
    DichotomyReport,
    KIND_CALLBACK,
    KIND_CONSTANT,
    KIND_EXPLICIT,
    KIND_GEOMETRIC,
    KIND_POWER_LAW,
    KakutaniComparison,
    ParamSequencePair,
    REPORT_TERM_LIMIT,
    TAIL_CONTINUES,
    TAIL_EQUAL_AFTER_N,
    VERDICT_EQUIVALENT,
    VERDICT_INCONCLUSIVE,
    VERDICT_SINGULAR,
    chi_sequence,
    classify,
    concrete_pairs,
    equivalent_iff_kakutani,
    location_embedding,
    scale_embedding,
)
from .divergence import (
    DivergencePair,
    SMALL_CHI,
    affinity_from_chi,
    cauchy_pdf,
    hellinger_affinity,
    kakutani_from_chi,
    kakutani_term,
    kl_divergence,
    log_density_ratio,
    log_ratio_bound,
)
from .halfplane import (
    CanonicalForm,
    DEGENERATE_CHI,
    DET_TOL,
    MoebiusMap,
    UHPoint,
    act,
    act_pair,
    canonical_lambda,
    reduce_to_canonical,
    chi,
)
from .montecarlo import (
    DIVERGENCE_THRESHOLD,
    ExperimentReport,
    MAX_DRAWS,
    ResourceLimitError,
    TrajectoryBatch,
    TrajectorySummary,
    default_checkpoints,
    dichotomy_experiment,
    doubling_increment_medians,
    sample_cauchy,
    simulate_log_ratios,
    trial_seeds,
)
from .numerics import (
    QuadratureResult,
    SumDiagnostics,
    TREND_GROWING,
    TREND_INDETERMINATE,
    TREND_PLATEAUING,
    agm,
    integrate_interval,
    integrate_real_line,
    partial_sum_diagnostics,
)
from .seqfile import (
    HEADER,
    KIND_OBSERVED,
    SequenceFileError,
    SequenceSpec,
    format_sequence_file,
    parse_sequence_file,
)

__version__ = "0.1.0"

__all__ = [
    "UHPoint",
    "MoebiusMap",
    "CanonicalForm",
    "chi",
    "act",
    "act_pair",
    "canonical_lambda",
    "reduce_to_canonical",
    "DET_TOL",
    "DEGENERATE_CHI",
    "agm",
    "integrate_interval",
    "integrate_real_line",
    "partial_sum_diagnostics",
    "QuadratureResult",
    "SumDiagnostics",
    "TREND_PLATEAUING",
    "TREND_GROWING",
    "TREND_INDETERMINATE",
    "cauchy_pdf",
    "kl_divergence",
    "log_density_ratio",
    "log_ratio_bound",
    "affinity_from_chi",
    "hellinger_affinity",
    "kakutani_from_chi",
    "kakutani_term",
    "DivergencePair",
    "SMALL_CHI",
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
    "SequenceSpec",
    "SequenceFileError",
    "parse_sequence_file",
    "format_sequence_file",
    "HEADER",
    "KIND_OBSERVED",
    "__version__",
]
