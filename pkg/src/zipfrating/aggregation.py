"""Composite ratings and rankings.

Once every indicator sits on the additive latent scale, weighted summation
is legitimate: a per-subject composite mixes the indicator latents, and
subject composites roll up into an overall rating weighted by credit hours
(or any expert weighting). Reports rank students by descending composite
using competition ranking, where ties share the better position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ConfigError, InputError
from .validation import as_float_vector

__all__ = [
    "CompositeConfig",
    "RatingRow",
    "RatingReport",
    "composite",
    "weighted_composite",
    "aggregate_subjects",
    "rank_report",
    "competition_positions",
]


@dataclass(frozen=True)
class CompositeConfig:
    """Weights of the composite: attendance share k and subject weights.

    k is the attendance indicator's share in the per-subject composite; it
    is an administrative lever, set high (around 0.25..0.35) while class
    attendance needs stimulating and lowered toward 0 as teaching settles.
    Subject weights are typically curriculum hours.
    """

    attendance_weight_k: float = 0.33
    subject_weights: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        k = self.attendance_weight_k
        if not (math.isfinite(k) and 0.0 <= k <= 1.0):
            raise InputError(f"attendance weight k must lie in [0, 1], got {k!r}")
        for subject, weight in self.subject_weights.items():
            if not (math.isfinite(weight) and weight > 0):
                raise InputError(
                    f"subject weight for {subject!r} must be positive, got {weight!r}"
                )


@dataclass(frozen=True)
class RatingRow:
    """One report line; L2 is None when the subject ran on a single indicator."""

    student_id: str
    L1: float
    L2: float | None
    R: float
    rank_position: int


@dataclass(frozen=True)
class RatingReport:
    """Per-subject rating: rows sorted by descending composite."""

    subject: str
    rows: tuple[RatingRow, ...]


def composite(L1: float, L2: float, k: float) -> float:
    """Two-indicator composite (1 - k) * L1 + k * L2 on unrounded latents."""
    if not (math.isfinite(k) and 0.0 <= k <= 1.0):
        raise InputError(f"weight k must lie in [0, 1], got {k!r}")
    return (1.0 - k) * float(L1) + k * float(L2)


def weighted_composite(latents: Sequence[float], weights: Sequence[float]) -> float:
    """Weighted mean of any number of indicator latents.

    Weights must be non-negative with a positive sum; they are normalized
    internally, so the two-indicator composite is the special case
    weights = (1 - k, k).
    """
    vals = as_float_vector(latents, "latents", min_len=1)
    wts = as_float_vector(weights, "weights", min_len=1)
    if len(vals) != len(wts):
        raise InputError(
            f"{len(vals)} latents but {len(wts)} weights were supplied"
        )
    if any(w < 0 for w in wts):
        raise InputError("weights must be non-negative")
    total = math.fsum(wts)
    if total <= 0:
        raise InputError("weights must not all be zero")
    return math.fsum(v * w for v, w in zip(vals, wts)) / total


def aggregate_subjects(
    per_subject_R: Mapping[str, float], weights: Mapping[str, float]
) -> float:
    """Overall rating: weighted mean of per-subject composites.

    Every rated subject must have a weight (credit hours or an expert
    number); weights are normalized to sum to 1, so uniform rescaling of
    all weights changes nothing.
    """
    if not per_subject_R:
        raise InputError("no subject ratings to aggregate")
    missing = [s for s in per_subject_R if s not in weights]
    if missing:
        raise ConfigError(f"no weight configured for subject(s): {missing}")
    used = {s: float(weights[s]) for s in per_subject_R}
    for subject, w in used.items():
        if not (math.isfinite(w) and w > 0):
            raise InputError(f"weight for {subject!r} must be positive, got {w!r}")
    total = math.fsum(used.values())
    return math.fsum(float(r) * used[s] for s, r in per_subject_R.items()) / total


def competition_positions(sorted_scores: Sequence[float]) -> list[int]:
    """Positions for a descending score list: ties share the better one.

    Example: scores 10, 8, 8, 5 map to positions 1, 2, 2, 4.
    """
    positions = []
    for i, score in enumerate(sorted_scores):
        if i > 0 and score == sorted_scores[i - 1]:
            positions.append(positions[-1])
        else:
            positions.append(i + 1)
    return positions


def rank_report(rows, subject: str = "") -> RatingReport:
    """Rank (student_id, L1, L2, R) rows by descending composite.

    Rows with equal R share the better position and the following position
    is skipped. Internal values stay at full precision; rounding to
    integers happens in the report writer only.
    """
    rows = list(rows)
    if not rows:
        raise InputError("cannot rank an empty report")
    ordered = sorted(rows, key=lambda row: -float(row[3]))
    positions = competition_positions([float(row[3]) for row in ordered])
    report_rows = tuple(
        RatingRow(
            student_id=str(sid),
            L1=float(L1),
            L2=None if L2 is None else float(L2),
            R=float(R),
            rank_position=pos,
        )
        for (sid, L1, L2, R), pos in zip(ordered, positions)
    )
    return RatingReport(subject=subject, rows=report_rows)
