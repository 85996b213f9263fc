"""Skewness gate for test-score distributions.

A norm-referenced test that most of the cohort aces produces a strongly
left-skewed score distribution and stops discriminating among the strong
students. Such an administration is rejected before it can enter the
rating. The gate looks at test scores only; attendance counts are not
test results and skip it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .stats import sample_skewness

__all__ = ["ValidityConfig", "ValidityVerdict", "gate_test_scores", "REJECTION_HINT"]

REJECTION_HINT = (
    "the test left no headroom for strong examinees; administer a few "
    "harder follow-up items, add the results to the raw scores, and rate "
    "the combined totals instead"
)


@dataclass(frozen=True)
class ValidityConfig:
    """Gate settings: rejection threshold on skewness, and an off switch.

    The gate is meant for cohorts that represent the test's target
    population; disable it for small non-representative groups whose
    skewness reflects group composition rather than test quality, or when
    scoring an externally standardized instrument.
    """

    skew_threshold: float = -1.0
    enabled: bool = True

    def __post_init__(self):
        if not math.isfinite(self.skew_threshold) or self.skew_threshold >= 0:
            raise InputError(
                f"skew_threshold must be negative, got {self.skew_threshold!r}"
            )


@dataclass(frozen=True)
class ValidityVerdict:
    """Outcome of the gate: computed skewness plus the accept/reject call."""

    skewness: float
    accepted: bool
    reason: str  # "accepted" | "left-skewed-rejected" | "gate-disabled"
    hint: str = ""


def gate_test_scores(
    scores, cfg: ValidityConfig = ValidityConfig()
) -> ValidityVerdict:
    """Accept or reject a test-score distribution by its sample skewness.

    Rejects exactly when the gate is enabled and skewness falls strictly
    below the (negative) threshold; a right-skewed distribution never
    rejects, and skewness exactly at the threshold is accepted. Fewer than
    3 scores or a zero-variance sample raises an insufficient-data error,
    which is distinct from rejection.
    """
    skew = sample_skewness(scores)
    if not cfg.enabled:
        return ValidityVerdict(skewness=skew, accepted=True, reason="gate-disabled")
    if skew < cfg.skew_threshold:
        return ValidityVerdict(
            skewness=skew,
            accepted=False,
            reason="left-skewed-rejected",
            hint=REJECTION_HINT,
        )
    return ValidityVerdict(skewness=skew, accepted=True, reason="accepted")
