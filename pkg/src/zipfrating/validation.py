"""Shared input checks and the display-rounding convention."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import InputError, InsufficientDataError


def as_float_vector(values: Iterable, name: str, min_len: int = 1) -> list[float]:
    """Coerce to a list of finite floats, or raise a descriptive error."""
    try:
        out = [float(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name} must contain numbers: {exc}") from exc
    if len(out) < min_len:
        raise InsufficientDataError(
            f"{name} needs at least {min_len} value(s), got {len(out)}"
        )
    for v in out:
        if not math.isfinite(v):
            raise InputError(f"{name} must be finite, got {v!r}")
    return out


def require_positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise InputError(f"{name} must be a positive finite number, got {value!r}")
    return value


def round_half_away(x: float) -> int:
    """Round to the nearest integer with ties going away from zero.

    Used for every displayed integer; Python's built-in round() would send
    halves to the even neighbour instead.
    """
    if x >= 0:
        return int(math.floor(x + 0.5))
    return int(math.ceil(x - 0.5))


def all_equal(values: Sequence[float]) -> bool:
    return all(v == values[0] for v in values)
