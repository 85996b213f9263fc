"""Normal-tail probabilities and sample skewness.

Only the two statistics the rating pipeline needs live here; this is not a
general statistics module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSampleError, InputError
from .validation import as_float_vector

__all__ = ["ReferenceDistribution", "normal_upper_tail", "sample_skewness"]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ReferenceDistribution:
    """Normal model of the calibration trait in the reference population.

    The defaults follow the classic IQ convention: mean 100, standard
    deviation 16.
    """

    mean: float = 100.0
    sd: float = 16.0

    def __post_init__(self):
        if not (math.isfinite(self.mean) and math.isfinite(self.sd)):
            raise InputError("reference distribution parameters must be finite")
        if self.sd <= 0:
            raise InputError(f"reference sd must be positive, got {self.sd}")


def normal_upper_tail(
    x: float, dist: ReferenceDistribution = ReferenceDistribution()
) -> float:
    """Upper-tail probability P(X >= x) for X ~ Normal(dist.mean, dist.sd).

    Evaluated through the complementary error function, which keeps the
    absolute error below 1e-8 everywhere on the real line.
    """
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"x must be finite, got {x!r}")
    z = (x - dist.mean) / dist.sd
    return 0.5 * math.erfc(z / _SQRT2)


def sample_skewness(values) -> float:
    """Adjusted Fisher-Pearson skewness coefficient.

    Computes n/((n-1)(n-2)) * sum(((x - mean)/s)^3) with s the
    (n-1)-denominator standard deviation, i.e. the same quantity the usual
    spreadsheet SKEW function reports.
    """
    xs = as_float_vector(values, "skewness sample", min_len=3)
    n = len(xs)
    mean = math.fsum(xs) / n
    var = math.fsum((v - mean) ** 2 for v in xs) / (n - 1)
    if var == 0.0:
        raise DegenerateSampleError("all values are equal; skewness is undefined")
    s = math.sqrt(var)
    cubed = math.fsum(((v - mean) / s) ** 3 for v in xs)
    return n / ((n - 1) * (n - 2)) * cubed
