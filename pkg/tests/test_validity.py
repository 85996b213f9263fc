"""Skewness gate behaviour."""

from __future__ import annotations

import pytest

from zipfrating import (
    InputError,
    InsufficientDataError,
    ValidityConfig,
    gate_test_scores,
    sample_skewness,
)

from conftest import LEFT_SKEWED_SCORES, MIRRORED_SCORES


def test_left_skew_beyond_threshold_rejects():
    verdict = gate_test_scores(LEFT_SKEWED_SCORES)
    assert sample_skewness(LEFT_SKEWED_SCORES) < -1.0
    assert not verdict.accepted
    assert verdict.reason == "left-skewed-rejected"
    assert verdict.hint


def test_right_skew_never_rejects():
    verdict = gate_test_scores([1, 2, 3, 4, 100])
    assert verdict.skewness == pytest.approx(2.2323959116364582, abs=1e-12)
    assert verdict.accepted
    assert verdict.reason == "accepted"


def test_mild_left_skew_is_accepted():
    scores = [1, 4, 5, 6, 7, 8]
    assert -1.0 < sample_skewness(scores) < 0.0
    assert gate_test_scores(scores).accepted


def test_boundary_is_accepted():
    # Strict comparison: skewness exactly at the threshold passes.
    skew = sample_skewness(LEFT_SKEWED_SCORES)
    cfg = ValidityConfig(skew_threshold=skew)
    verdict = gate_test_scores(LEFT_SKEWED_SCORES, cfg)
    assert verdict.accepted
    just_above = ValidityConfig(skew_threshold=skew + 1e-9)
    assert not gate_test_scores(LEFT_SKEWED_SCORES, just_above).accepted


def test_disabled_gate_reports_skewness_but_accepts():
    cfg = ValidityConfig(enabled=False)
    verdict = gate_test_scores(LEFT_SKEWED_SCORES, cfg)
    assert verdict.accepted
    assert verdict.reason == "gate-disabled"
    assert verdict.skewness == pytest.approx(sample_skewness(LEFT_SKEWED_SCORES))


def test_rejection_is_affine_invariant():
    base = gate_test_scores(LEFT_SKEWED_SCORES)
    shifted = gate_test_scores([3.5 * v + 11 for v in LEFT_SKEWED_SCORES])
    assert base.accepted == shifted.accepted is False
    assert shifted.skewness == pytest.approx(base.skewness, rel=1e-9)


def test_mirrored_scores_flip_the_verdict():
    assert not gate_test_scores(LEFT_SKEWED_SCORES).accepted
    assert gate_test_scores(MIRRORED_SCORES).accepted


def test_insufficient_data_is_not_rejection():
    with pytest.raises(InsufficientDataError):
        gate_test_scores([1, 2])
    with pytest.raises(InsufficientDataError):
        gate_test_scores([7, 7, 7, 7])


def test_threshold_must_be_negative():
    with pytest.raises(InputError):
        ValidityConfig(skew_threshold=0.0)
    with pytest.raises(InputError):
        ValidityConfig(skew_threshold=1.0)
