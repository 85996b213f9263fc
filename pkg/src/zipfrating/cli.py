"""Command-line interface.

Subcommands: calibrate (build and store a rank table), validate (skewness
gate on a score file), rate (full per-subject run), aggregate (roll
per-subject reports into an overall rating).

Exit codes are stable: 0 success, 1 validity rejection, 2 input or
configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .aggregation import CompositeConfig
from .calibration import build_calibration
from .errors import RatingError, ValidityRejectedError
from .latent import ZipfConfig
from .pipeline import (
    PipelineConfig,
    aggregate_overall,
    load_flat_config,
    run_subject,
    subject_from_report_path,
)
from .stats import ReferenceDistribution
from .validity import ValidityConfig, gate_test_scores

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zipfrating",
        description="Additive student ratings via rank calibration and "
        "long-tail latent scaling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cal = sub.add_parser("calibrate", help="build a conditional-rank table")
    cal.add_argument("--scores", required=True, help="calibration scores CSV "
                     "(student_id,value; ids are ignored)")
    cal.add_argument("--mean", type=float, default=100.0)
    cal.add_argument("--sd", type=float, default=16.0)
    cal.add_argument("--scale", type=float, default=100.0)
    cal.add_argument("-o", "--output", required=True, help="table CSV to write")
    cal.set_defaults(func=cmd_calibrate)

    val = sub.add_parser("validate", help="skewness gate for a test-score file")
    val.add_argument("--scores", required=True, help="scores CSV (student_id,value)")
    val.add_argument("--threshold", type=float, default=-1.0,
                     help="rejection threshold on sample skewness (negative)")
    val.set_defaults(func=cmd_validate)

    rate = sub.add_parser("rate", help="rate one subject end to end")
    rate.add_argument("--subject", required=True)
    rate.add_argument("--tests", required=True, help="test-score CSV")
    rate.add_argument("--attendance", required=True, help="attendance CSV")
    rate.add_argument("--table", required=True, help="calibration table CSV")
    rate.add_argument("--config", help="flat key = value config file; "
                      "flags below override it")
    rate.add_argument("--k", type=float, default=None,
                      help="attendance weight in the composite (default 0.33)")
    rate.add_argument("--alpha", type=float, default=None,
                      help="rank-size exponent (default 1.0)")
    rate.add_argument("--constant", type=float, default=None,
                      help="rank-size numerator (default 100000)")
    rate.add_argument("--round-latent", action=argparse.BooleanOptionalAction,
                      default=None, help="round latent anchors before fitting "
                      "(default on)")
    rate.add_argument("--skew-threshold", type=float, default=None,
                      help="validity gate threshold (default -1.0)")
    rate.add_argument("--gate", action=argparse.BooleanOptionalAction,
                      default=None, help="enable the validity gate (default on)")
    rate.add_argument("--fallback-single-indicator",
                      action=argparse.BooleanOptionalAction, default=None,
                      help="fall back to the test latent when the attendance "
                      "fit is degenerate (default off)")
    rate.add_argument("-o", "--output", required=True, help="output directory")
    rate.set_defaults(func=cmd_rate)

    agg = sub.add_parser("aggregate", help="combine subject reports into an "
                         "overall rating")
    agg.add_argument("--reports", required=True, nargs="+",
                     help="per-subject report CSVs (named <subject>_report.csv)")
    agg.add_argument("--weights", required=True, help="subject,weight CSV")
    agg.add_argument("-o", "--output", required=True, help="overall CSV to write")
    agg.set_defaults(func=cmd_aggregate)

    return parser


def cmd_calibrate(args) -> int:
    series = io.load_indicator_csv(args.scores)
    dist = ReferenceDistribution(mean=args.mean, sd=args.sd)
    table = build_calibration(series.values, dist, args.scale)
    io.write_calibration_csv(table, args.output)
    print(f"wrote calibration table with {len(table)} entries to {args.output}")
    return EXIT_OK


def cmd_validate(args) -> int:
    series = io.load_indicator_csv(args.scores)
    cfg = ValidityConfig(skew_threshold=args.threshold)
    verdict = gate_test_scores(series.values, cfg)
    print(f"skewness: {verdict.skewness:.6f}")
    print(f"verdict: {verdict.reason}")
    if not verdict.accepted:
        print(f"hint: {verdict.hint}", file=sys.stderr)
        return EXIT_REJECTED
    return EXIT_OK


def _merged(args, flag: str, config_key: str, default):
    """CLI flag beats config file beats default."""
    value = getattr(args, flag)
    if value is not None:
        return value
    return args.file_config.get(config_key, default)


def cmd_rate(args) -> int:
    args.file_config = load_flat_config(args.config) if args.config else {}
    cfg = PipelineConfig(
        zipf=ZipfConfig(
            alpha=_merged(args, "alpha", "alpha", 1.0),
            constant=_merged(args, "constant", "constant", 100_000.0),
            round_latent=_merged(args, "round_latent", "round_latent", True),
        ),
        validity=ValidityConfig(
            skew_threshold=_merged(args, "skew_threshold", "skew_threshold", -1.0),
            enabled=_merged(args, "gate", "gate_enabled", True),
        ),
        composite=CompositeConfig(
            attendance_weight_k=_merged(args, "k", "k", 0.33)
        ),
        fallback_single_indicator=_merged(
            args, "fallback_single_indicator", "fallback_single_indicator", False
        ),
        output_dir=Path(args.output),
    )
    tests = io.load_indicator_csv(args.tests, subject=args.subject,
                                  indicator_name="tests")
    attendance = io.load_indicator_csv(args.attendance, subject=args.subject,
                                       indicator_name="attendance")
    table = io.load_calibration_csv(args.table)
    result = run_subject(args.subject, tests, attendance, table, cfg)
    print(f"skewness: {result.verdict.skewness:.6f} ({result.verdict.reason})")
    for fit in result.fits:
        print(
            f"{fit.indicator_name}: L = {fit.model.scale_a:.4g} * "
            f"exp({fit.model.rate_b:.4g} * x), log-residual rms "
            f"{fit.log_residual_rms:.4f}"
        )
    for note in result.notes:
        print(f"note: {note}", file=sys.stderr)
    print(f"wrote report for {len(result.report.rows)} students to "
          f"{Path(args.output) / (args.subject + '_report.csv')}")
    return EXIT_OK


def cmd_aggregate(args) -> int:
    weights = io.load_weights_csv(args.weights)
    per_subject = {
        subject_from_report_path(path): io.load_report_csv(path)
        for path in args.reports
    }
    rows = aggregate_overall(per_subject, weights)
    io.write_overall_csv(rows, args.output)
    print(f"wrote overall rating for {len(rows)} students to {args.output}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidityRejectedError as exc:
        print(f"skewness: {exc.verdict.skewness:.6f}")
        print(f"rejected: {exc}", file=sys.stderr)
        if exc.verdict.hint:
            print(f"hint: {exc.verdict.hint}", file=sys.stderr)
        return EXIT_REJECTED
    except RatingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
