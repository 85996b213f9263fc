"""Additive student ratings from deformed educational indicators.

Raw indicators (test scores, attendance counts, grades) cannot be weighted
and summed directly: their distributions are short-tailed deformations of
the long-tailed trait they measure. This package restores additivity by
calibrating conditional ranks against a reference population, anchoring
each rank to a rank-size latent value, and fitting a per-indicator
exponential transform. The resulting latents combine into per-subject and
cross-subject composite ratings.
"""

from .aggregation import (
    CompositeConfig,
    RatingReport,
    RatingRow,
    aggregate_subjects,
    composite,
    rank_report,
    weighted_composite,
)
from .calibration import (
    CalibrationEntry,
    CalibrationTable,
    build_calibration,
    resample_ranks,
)
from .errors import (
    ConfigError,
    DegenerateFitError,
    DegenerateSampleError,
    InputError,
    InsufficientDataError,
    PairingError,
    ParseError,
    RatingError,
    RosterError,
    ValidityRejectedError,
)
from .estimators import LatentScaleTransformer, RankCalibrator
from .latent import (
    ExponentialModel,
    IndicatorSeries,
    ZipfConfig,
    apply_transform,
    fit_exponential,
    rank_and_pair,
    zipf_values,
)
from .pipeline import PipelineConfig, SubjectResult, aggregate_overall, run_subject
from .stats import ReferenceDistribution, normal_upper_tail, sample_skewness
from .validity import ValidityConfig, ValidityVerdict, gate_test_scores

__version__ = "0.1.0"

__all__ = [
    "CalibrationEntry",
    "CalibrationTable",
    "CompositeConfig",
    "ConfigError",
    "DegenerateFitError",
    "DegenerateSampleError",
    "ExponentialModel",
    "IndicatorSeries",
    "InputError",
    "InsufficientDataError",
    "LatentScaleTransformer",
    "PairingError",
    "ParseError",
    "PipelineConfig",
    "RankCalibrator",
    "RatingError",
    "RatingReport",
    "RatingRow",
    "ReferenceDistribution",
    "RosterError",
    "SubjectResult",
    "ValidityConfig",
    "ValidityRejectedError",
    "ValidityVerdict",
    "ZipfConfig",
    "aggregate_overall",
    "aggregate_subjects",
    "apply_transform",
    "build_calibration",
    "composite",
    "fit_exponential",
    "gate_test_scores",
    "normal_upper_tail",
    "rank_and_pair",
    "rank_report",
    "resample_ranks",
    "run_subject",
    "sample_skewness",
    "weighted_composite",
    "zipf_values",
]
