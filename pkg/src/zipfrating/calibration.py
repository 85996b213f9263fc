"""Conditional-rank calibration against a reference population.

A calibration sample (trait measurements of a pilot group that represents
the cohort) is pushed through the reference distribution's upper tail,
turning each score into the rank the student would hypothetically hold in
the whole population. The resulting table is built once, stored, and
reused across subjects and terms; its ranks are linearly resampled to
whatever cohort size a given term presents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InsufficientDataError
from .stats import ReferenceDistribution, normal_upper_tail
from .validation import as_float_vector, require_positive, round_half_away

__all__ = [
    "CalibrationEntry",
    "CalibrationTable",
    "build_calibration",
    "resample_ranks",
    "interpolate_positions",
]


@dataclass(frozen=True)
class CalibrationEntry:
    """One calibration score with its tail probability and conditional rank."""

    score: float
    tail_probability: float
    rank_real: float
    rank_display: int


@dataclass(frozen=True)
class CalibrationTable:
    """Ordered conditional ranks derived from a calibration sample.

    Entries are sorted by ascending score, so rank_real runs in descending
    order. rank_real carries full precision; rank_display is the
    nearest-integer form used in printed tables. Carrying the real value is
    what keeps downstream latent anchors faithful for the strongest
    students, where the rank is small and rounding bites hardest.
    """

    entries: tuple[CalibrationEntry, ...]
    scale: float = 100.0

    def __post_init__(self):
        require_positive(self.scale, "scale")
        object.__setattr__(self, "entries", tuple(self.entries))
        scores = [e.score for e in self.entries]
        if scores != sorted(scores):
            raise InputError("calibration entries must be in ascending score order")

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def ranks(self) -> list[float]:
        """Full-precision conditional ranks, descending."""
        return [e.rank_real for e in self.entries]


def build_calibration(
    sample,
    dist: ReferenceDistribution = ReferenceDistribution(),
    scale: float = 100.0,
) -> CalibrationTable:
    """Build the conditional-rank table for a calibration sample.

    Each score maps to rank_real = P(X >= score) * 100 * scale, i.e. the
    percent-form tail percentile stretched by `scale` (default 100) so that
    ranks are convenient integers when displayed.
    """
    values = as_float_vector(sample, "calibration sample", min_len=1)
    scale = require_positive(scale, "scale")
    entries = []
    for score in sorted(values):
        tail = normal_upper_tail(score, dist)
        rank_real = tail * 100.0 * scale
        entries.append(
            CalibrationEntry(
                score=score,
                tail_probability=tail,
                rank_real=rank_real,
                rank_display=round_half_away(rank_real),
            )
        )
    return CalibrationTable(entries=tuple(entries), scale=scale)


def interpolate_positions(values, target_size: int) -> list[float]:
    """Linearly resample a sequence onto target_size index positions.

    Position j of the output (0-based) reads the input at the fractional
    index j*(m-1)/(n-1) and interpolates between the bracketing entries.
    Both endpoints are preserved exactly, and target_size == len(values)
    returns the input unchanged.
    """
    vals = [float(v) for v in values]
    m = len(vals)
    n = int(target_size)
    if m < 2 or n < 2:
        raise InsufficientDataError(
            f"resampling needs at least 2 source and 2 target positions, "
            f"got {m} and {n}"
        )
    out = []
    for j in range(n):
        pos = j * (m - 1) / (n - 1)
        lo = int(pos)
        frac = pos - lo
        if frac == 0.0:
            out.append(vals[lo])
        else:
            out.append(vals[lo] + frac * (vals[lo + 1] - vals[lo]))
    return out


def resample_ranks(table: CalibrationTable, target_size: int) -> list[float]:
    """Resample the table's descending ranks to a cohort of target_size."""
    return interpolate_positions(table.ranks, target_size)
