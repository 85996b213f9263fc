"""Scikit-learn style estimators wrapping the calibration and latent steps.

These adapters let the rating transforms participate in the usual
fit/transform machinery (cloning, get_params, pipelines) while the
functional modules keep the actual arithmetic.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .calibration import build_calibration, interpolate_positions, resample_ranks
from .errors import InputError
from .latent import ZipfConfig, fit_exponential, zipf_values
from .stats import ReferenceDistribution

__all__ = ["RankCalibrator", "LatentScaleTransformer"]


def _as_vector(X) -> np.ndarray:
    x = np.asarray(X, dtype=float).ravel()
    if x.size == 0:
        raise InputError("X must contain at least one value")
    if not np.isfinite(x).all():
        raise InputError("X must be finite")
    return x


class RankCalibrator(BaseEstimator):
    """Learn a conditional-rank table from reference trait scores.

    Parameters
    ----------
    mean, sd : float
        Normal parameters of the trait in the reference population.
    scale : float
        Multiplier applied to the percent-form tail percentile; the default
        100 makes displayed ranks convenient integers.

    Attributes
    ----------
    table_ : CalibrationTable
        The fitted table, reusable across subjects and terms.
    """

    def __init__(self, mean=100.0, sd=16.0, scale=100.0):
        self.mean = mean
        self.sd = sd
        self.scale = scale

    def fit(self, X, y=None):
        """Build the rank table from a 1-d array of calibration scores."""
        scores = _as_vector(X)
        dist = ReferenceDistribution(mean=self.mean, sd=self.sd)
        self.table_ = build_calibration(scores.tolist(), dist, self.scale)
        return self

    def conditional_ranks(self, cohort_size: int) -> list[float]:
        """Descending ranks resampled to the given cohort size."""
        check_is_fitted(self, "table_")
        return resample_ranks(self.table_, cohort_size)


class LatentScaleTransformer(BaseEstimator, TransformerMixin):
    """Fit the rank-anchored exponential latent scale to one indicator.

    fit() sorts the cohort's raw values, pairs them with descending
    conditional ranks (resampled to the cohort size when needed), computes
    the rank-size anchors and fits L = a * exp(b * x) in log space.
    transform() then maps raw values onto the additive latent scale.

    Parameters
    ----------
    ranks : sequence of float, optional
        Descending conditional ranks. Resampled to the cohort size if the
        lengths differ.
    calibrator : fitted RankCalibrator, optional
        Used to produce the ranks when `ranks` is not given.
    alpha, constant, round_latent :
        Rank-size transform settings; see ZipfConfig.

    Attributes
    ----------
    model_ : ExponentialModel
    anchors_ : ndarray
        Latent anchors the fit saw, in ascending-value order.
    """

    def __init__(
        self,
        ranks=None,
        calibrator=None,
        alpha=1.0,
        constant=100_000.0,
        round_latent=True,
    ):
        self.ranks = ranks
        self.calibrator = calibrator
        self.alpha = alpha
        self.constant = constant
        self.round_latent = round_latent

    def fit(self, X, y=None):
        """Fit the latent transform on a 1-d array of raw indicator values."""
        x = _as_vector(X)
        n = x.size
        if self.ranks is not None:
            ranks = [float(r) for r in self.ranks]
            if len(ranks) != n:
                ranks = interpolate_positions(ranks, n)
        elif self.calibrator is not None:
            ranks = self.calibrator.conditional_ranks(n)
        else:
            raise InputError("either ranks or a fitted calibrator is required")
        cfg = ZipfConfig(
            alpha=self.alpha, constant=self.constant, round_latent=self.round_latent
        )
        anchors = zipf_values(ranks, cfg)
        ordered = np.sort(x, kind="stable")
        self.model_ = fit_exponential(list(zip(ordered.tolist(), anchors)))
        self.anchors_ = np.asarray(anchors)
        return self

    def transform(self, X) -> np.ndarray:
        """Map raw indicator values onto the latent scale, elementwise."""
        check_is_fitted(self, "model_")
        x = np.asarray(X, dtype=float)
        return self.model_.scale_a * np.exp(self.model_.rate_b * x)
