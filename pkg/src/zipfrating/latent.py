"""Long-tail latent scaling of indicator series.

Raw indicator scores (test points, attended classes, grades) are not
additive: their distributions are deformed relative to the long-tailed
latent trait they proxy. The fix implemented here anchors each cohort
position to a rank-size value L' = C / r**(1/alpha) computed from the
conditional ranks, then fits L = a * exp(b * x) to (indicator, L') in log
space. The fitted exponential is the per-indicator transform onto an
additive scale, and it keeps its functional form under any linear
re-scoring of the indicator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    DegenerateFitError,
    InputError,
    InsufficientDataError,
    PairingError,
    RosterError,
)
from .validation import round_half_away

__all__ = [
    "ZipfConfig",
    "IndicatorSeries",
    "ExponentialModel",
    "RankedPoint",
    "zipf_values",
    "rank_and_pair",
    "fit_exponential",
    "apply_transform",
]


@dataclass(frozen=True)
class ZipfConfig:
    """Rank-size transform settings.

    alpha is the distribution exponent (most measured social long tails sit
    near 1); constant is an arbitrary positive numerator kept large so that
    latent anchors stay comfortably above 1. round_latent controls whether
    anchors are rounded to integers before fitting, which matches how the
    working tables are usually printed.
    """

    alpha: float = 1.0
    constant: float = 100_000.0
    round_latent: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= 2.0):
            raise InputError(f"alpha must lie in (0, 2], got {self.alpha!r}")
        if not (math.isfinite(self.constant) and self.constant > 0):
            raise InputError(f"constant must be positive, got {self.constant!r}")


@dataclass(frozen=True)
class IndicatorSeries:
    """Per-student raw values of one indicator for one subject.

    points keeps the roster order it was loaded in; nothing downstream
    mutates it. Student ids must be unique.
    """

    subject: str
    indicator_name: str
    points: tuple[tuple[str, float], ...]

    def __post_init__(self):
        pts = tuple((str(sid), float(val)) for sid, val in self.points)
        object.__setattr__(self, "points", pts)
        seen = set()
        for sid, val in pts:
            if sid in seen:
                raise RosterError(f"duplicate student id {sid!r}")
            seen.add(sid)
            if not math.isfinite(val):
                raise InputError(f"value for student {sid!r} must be finite")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def student_ids(self) -> list[str]:
        return [sid for sid, _ in self.points]

    @property
    def values(self) -> list[float]:
        return [val for _, val in self.points]


@dataclass(frozen=True)
class ExponentialModel:
    """Fitted additive-scale transform L = scale_a * exp(rate_b * x)."""

    scale_a: float
    rate_b: float

    def __post_init__(self):
        if not (math.isfinite(self.scale_a) and self.scale_a > 0):
            raise InputError(f"scale_a must be positive, got {self.scale_a!r}")
        if not math.isfinite(self.rate_b):
            raise InputError(f"rate_b must be finite, got {self.rate_b!r}")

    def predict(self, x: float) -> float:
        return self.scale_a * math.exp(self.rate_b * float(x))


class RankedPoint(NamedTuple):
    student_id: str
    raw_value: float
    rank: float


def zipf_values(ranks: Sequence[float], cfg: ZipfConfig = ZipfConfig()) -> list[float]:
    """Map conditional ranks to latent anchors C / r**(1/alpha).

    Ranks must be positive. With cfg.round_latent the anchors are rounded
    to the nearest integer (ties away from zero) before being returned.
    """
    out = []
    for r in ranks:
        r = float(r)
        if not math.isfinite(r) or r <= 0:
            raise InputError(f"ranks must be positive, got {r!r}")
        value = cfg.constant / r ** (1.0 / cfg.alpha)
        out.append(float(round_half_away(value)) if cfg.round_latent else value)
    return out


def rank_and_pair(
    series: IndicatorSeries, ranks_descending: Sequence[float]
) -> list[RankedPoint]:
    """Sort students by ascending indicator and attach descending ranks.

    The weakest raw value receives the largest (worst) conditional rank.
    The sort is stable, so students tied on the indicator keep their roster
    order and take adjacent ranks; which of them gets which rank does not
    matter downstream because the fitted transform depends on the raw value
    only.
    """
    if len(ranks_descending) != len(series):
        raise PairingError(
            f"series has {len(series)} students but {len(ranks_descending)} "
            f"ranks were supplied; resample the ranks first"
        )
    ordered = sorted(series.points, key=lambda p: p[1])
    return [
        RankedPoint(sid, val, float(rank))
        for (sid, val), rank in zip(ordered, ranks_descending)
    ]


def fit_exponential(pairs: Sequence[tuple[float, float]]) -> ExponentialModel:
    """Least-squares fit of y = a * exp(b * x) on (x, ln y).

    Ordinary least squares on the log of y gives the slope b and intercept
    ln a directly; this is exact for noise-free exponential data and is the
    fit every published coefficient in this pipeline comes from.
    """
    if len(pairs) < 2:
        raise InsufficientDataError(
            f"exponential fit needs at least 2 points, got {len(pairs)}"
        )
    x = np.asarray([p[0] for p in pairs], dtype=float)
    y = np.asarray([p[1] for p in pairs], dtype=float)
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise InputError("fit input must be finite")
    if (y <= 0).any():
        raise InputError("fit requires strictly positive y values")
    if np.unique(x).size < 2:
        raise DegenerateFitError(
            "all x values are equal; the exponential fit is underdetermined"
        )
    log_y = np.log(y)
    x_centered = x - x.mean()
    rate_b = float((x_centered * (log_y - log_y.mean())).sum() / (x_centered**2).sum())
    scale_a = float(np.exp(log_y.mean() - rate_b * x.mean()))
    return ExponentialModel(scale_a=scale_a, rate_b=rate_b)


def apply_transform(model: ExponentialModel, raw_value: float) -> float:
    """Evaluate the fitted transform at a raw indicator value.

    Returns the full-precision latent value; rounding to integers happens
    only when a report is emitted.
    """
    raw_value = float(raw_value)
    if not math.isfinite(raw_value):
        raise InputError(f"raw_value must be finite, got {raw_value!r}")
    return model.predict(raw_value)
