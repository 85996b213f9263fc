"""Exception types raised across the rating pipeline."""

from __future__ import annotations


class RatingError(Exception):
    """Base class for every error this package raises deliberately."""


class InputError(RatingError, ValueError):
    """A value or parameter is invalid (non-finite, out of range, malformed)."""


class InsufficientDataError(InputError):
    """Too few data points for the requested operation."""


class DegenerateSampleError(InsufficientDataError):
    """Sample has zero variance where spread is required."""


class DegenerateFitError(InputError):
    """All predictor values are equal; the curve fit is underdetermined."""


class PairingError(InputError):
    """Rank list and student series have different lengths."""


class RosterError(InputError):
    """Student identifiers are duplicated or do not line up across inputs."""


class ParseError(InputError):
    """Malformed input file; the message names the offending line."""


class ConfigError(InputError):
    """Invalid or incomplete run configuration."""


class ValidityRejectedError(RatingError):
    """Test-score distribution failed the skewness gate.

    Carries the full verdict so callers can report the computed skewness.
    """

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(
            f"test scores rejected: skewness {verdict.skewness:.4f} "
            f"is below the acceptance threshold"
        )
