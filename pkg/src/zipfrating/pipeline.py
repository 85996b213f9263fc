"""End-to-end per-subject rating runs and the cross-subject roll-up.

A subject run takes the cohort's test-score and attendance series plus the
stored calibration table and produces a ranked report: gate the test
distribution, resample ranks to cohort size, fit one exponential latent
transform per indicator, mix the latents into the composite, rank. The
run writes the report and one curve dump per indicator when an output
directory is configured.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from . import io
from .aggregation import (
    CompositeConfig,
    RatingReport,
    aggregate_subjects,
    competition_positions,
    composite,
    rank_report,
)
from .calibration import CalibrationTable, resample_ranks
from .errors import (
    ConfigError,
    DegenerateFitError,
    RosterError,
    ValidityRejectedError,
)
from .latent import (
    ExponentialModel,
    IndicatorSeries,
    ZipfConfig,
    apply_transform,
    fit_exponential,
    rank_and_pair,
    zipf_values,
)
from .stats import ReferenceDistribution
from .validity import ValidityConfig, ValidityVerdict, gate_test_scores

__all__ = [
    "PipelineConfig",
    "IndicatorFit",
    "SubjectResult",
    "run_subject",
    "fit_indicator",
    "aggregate_overall",
    "load_flat_config",
    "report_filename",
    "subject_from_report_path",
]


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a subject run needs apart from the data itself."""

    reference: ReferenceDistribution = ReferenceDistribution()
    zipf: ZipfConfig = ZipfConfig()
    validity: ValidityConfig = ValidityConfig()
    composite: CompositeConfig = CompositeConfig()
    fallback_single_indicator: bool = False
    output_dir: Path | None = None


@dataclass(frozen=True)
class IndicatorFit:
    """Fitted transform of one indicator plus the data behind the curve dump."""

    indicator_name: str
    model: ExponentialModel
    xs: tuple[float, ...]  # raw values, ascending
    empirical: tuple[float, ...]  # latent anchors the fit saw
    fitted: tuple[float, ...]  # model evaluated at xs
    log_residual_rms: float

    def curve_rows(self):
        return self.xs, self.empirical, self.fitted


@dataclass(frozen=True)
class SubjectResult:
    """Outcome of one subject run."""

    report: RatingReport
    verdict: ValidityVerdict
    fits: tuple[IndicatorFit, ...]
    notes: tuple[str, ...] = field(default=())


def fit_indicator(
    series: IndicatorSeries, ranks_descending, zipf_cfg: ZipfConfig
) -> tuple[IndicatorFit, dict[str, float]]:
    """Fit one indicator's latent transform and evaluate it per student.

    Returns the fit (with curve-dump data) and the student -> latent map.
    """
    paired = rank_and_pair(series, ranks_descending)
    anchors = zipf_values([p.rank for p in paired], zipf_cfg)
    model = fit_exponential([(p.raw_value, a) for p, a in zip(paired, anchors)])
    xs = tuple(p.raw_value for p in paired)
    fitted = tuple(apply_transform(model, x) for x in xs)
    rms = math.sqrt(
        math.fsum(
            (math.log(a) - math.log(f)) ** 2 for a, f in zip(anchors, fitted)
        )
        / len(anchors)
    )
    fit = IndicatorFit(
        indicator_name=series.indicator_name or "indicator",
        model=model,
        xs=xs,
        empirical=tuple(anchors),
        fitted=fitted,
        log_residual_rms=rms,
    )
    latents = {sid: apply_transform(model, value) for sid, value in series.points}
    return fit, latents


def _check_roster(tests: IndicatorSeries, attendance: IndicatorSeries) -> None:
    test_ids = set(tests.student_ids)
    att_ids = set(attendance.student_ids)
    if test_ids != att_ids:
        only_tests = sorted(test_ids - att_ids)
        only_att = sorted(att_ids - test_ids)
        raise RosterError(
            "test and attendance series must cover the same students; "
            f"only in tests: {only_tests}, only in attendance: {only_att}"
        )


def run_subject(
    subject: str,
    test_scores: IndicatorSeries,
    attendance: IndicatorSeries,
    table: CalibrationTable,
    cfg: PipelineConfig = PipelineConfig(),
) -> SubjectResult:
    """Run the full per-subject pipeline.

    Raises ValidityRejectedError when the test distribution fails the
    skewness gate. When the attendance fit is degenerate (every student
    attended equally) and cfg.fallback_single_indicator is set, the
    composite falls back to the test latent alone; otherwise the
    degenerate-fit error propagates. Writes the report CSV and one curve
    CSV per fitted indicator into cfg.output_dir when that is set.
    """
    _check_roster(test_scores, attendance)
    verdict = gate_test_scores(test_scores.values, cfg.validity)
    if not verdict.accepted:
        raise ValidityRejectedError(verdict)

    ranks = resample_ranks(table, len(test_scores))
    test_fit, L1 = fit_indicator(test_scores, ranks, cfg.zipf)

    notes: list[str] = []
    fits = [test_fit]
    k = cfg.composite.attendance_weight_k
    try:
        att_fit, L2 = fit_indicator(attendance, ranks, cfg.zipf)
        fits.append(att_fit)
    except DegenerateFitError as exc:
        if not cfg.fallback_single_indicator:
            raise
        L2 = None
        notes.append(
            f"attendance fit degenerate ({exc}); composite fell back to the "
            f"test latent alone"
        )

    rows = []
    for sid in test_scores.student_ids:
        if L2 is None:
            rows.append((sid, L1[sid], None, L1[sid]))
        else:
            rows.append((sid, L1[sid], L2[sid], composite(L1[sid], L2[sid], k)))
    report = rank_report(rows, subject=subject)
    result = SubjectResult(
        report=report, verdict=verdict, fits=tuple(fits), notes=tuple(notes)
    )
    if cfg.output_dir is not None:
        write_subject_outputs(result, cfg.output_dir)
    return result


def report_filename(subject: str) -> str:
    return f"{subject}_report.csv"


def subject_from_report_path(path) -> str:
    """Recover the subject label from a report file name."""
    stem = Path(path).stem
    return stem[: -len("_report")] if stem.endswith("_report") else stem


def write_subject_outputs(result: SubjectResult, output_dir) -> list[Path]:
    """Write the report CSV plus one curve CSV per fitted indicator."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    subject = result.report.subject
    written = [out / report_filename(subject)]
    io.write_report_csv(result.report, written[0])
    for fit in result.fits:
        curve_path = out / f"{subject}_{fit.indicator_name}_curve.csv"
        io.write_curve_csv(curve_path, *fit.curve_rows())
        written.append(curve_path)
    return written


def aggregate_overall(
    per_subject: Mapping[str, Mapping[str, float]], weights: Mapping[str, float]
) -> list[tuple[str, float, int]]:
    """Roll per-subject composites up into one ranked overall rating.

    per_subject maps subject -> (student -> R). Every subject needs a
    weight and every report must cover the same students.
    """
    if not per_subject:
        raise ConfigError("no reports to aggregate")
    subjects = sorted(per_subject)
    roster = set(per_subject[subjects[0]])
    for subject in subjects[1:]:
        if set(per_subject[subject]) != roster:
            raise RosterError(
                f"report for {subject!r} covers a different student set than "
                f"{subjects[0]!r}"
            )
    overall = {
        sid: aggregate_subjects(
            {subject: per_subject[subject][sid] for subject in subjects}, weights
        )
        for sid in roster
    }
    ordered = sorted(overall.items(), key=lambda item: (-item[1], item[0]))
    positions = competition_positions([rating for _, rating in ordered])
    return [
        (sid, rating, pos) for (sid, rating), pos in zip(ordered, positions)
    ]


_CONFIG_KEYS = {
    "mean": float,
    "sd": float,
    "scale": float,
    "alpha": float,
    "constant": float,
    "round_latent": bool,
    "k": float,
    "skew_threshold": float,
    "gate_enabled": bool,
    "fallback_single_indicator": bool,
}

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def load_flat_config(path) -> dict[str, object]:
    """Parse a flat "key = value" config file.

    Blank lines and '#' comments are skipped; unknown keys and unparsable
    values are configuration errors. Returns only the keys present, so CLI
    flags can override them individually.
    """
    path = Path(path)
    out: dict[str, object] = {}
    for line_num, raw in enumerate(
        path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}: line {line_num}: expected 'key = value'")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}: line {line_num}: unknown key {key!r}")
        kind = _CONFIG_KEYS[key]
        if kind is bool:
            lowered = value.lower()
            if lowered in _TRUE:
                out[key] = True
            elif lowered in _FALSE:
                out[key] = False
            else:
                raise ConfigError(
                    f"{path}: line {line_num}: {key} expects true/false, got {value!r}"
                )
        else:
            try:
                out[key] = float(value)
            except ValueError:
                raise ConfigError(
                    f"{path}: line {line_num}: {key} expects a number, got {value!r}"
                ) from None
    return out
