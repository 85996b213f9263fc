"""CSV formats used by the pipeline.

All files are UTF-8. Readers validate headers and report the line number
of the first malformed row; writers format deterministically so identical
inputs produce byte-identical files. Full-precision reals (calibration
tables, curve dumps) are serialized with repr, which round-trips floats
exactly and always carries more than 10 significant digits.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from .aggregation import RatingReport
from .calibration import CalibrationEntry, CalibrationTable
from .errors import ParseError, RosterError
from .latent import IndicatorSeries
from .validation import round_half_away

__all__ = [
    "load_indicator_csv",
    "load_weights_csv",
    "write_calibration_csv",
    "load_calibration_csv",
    "write_report_csv",
    "load_report_csv",
    "write_curve_csv",
    "write_overall_csv",
]

INDICATOR_HEADER = ["student_id", "value"]
CALIBRATION_HEADER = ["score", "tail_probability", "rank_real", "rank_display"]
REPORT_HEADER = [
    "student_id",
    "L1",
    "L1_exact",
    "L2",
    "L2_exact",
    "R",
    "R_exact",
    "rank",
]
WEIGHTS_HEADER = ["subject", "weight"]
CURVE_HEADER = ["x", "empirical_Lprime", "fitted_L"]
OVERALL_HEADER = ["student_id", "R", "R_exact", "rank"]


def _rows(path, expected_header: list[str]):
    """Yield (line_number, row) for data rows after validating the header."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: file is empty") from None
        if [h.strip() for h in header] != expected_header:
            raise ParseError(
                f"{path}: line 1: expected header "
                f"{','.join(expected_header)!r}, got {','.join(header)!r}"
            )
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(expected_header):
                raise ParseError(
                    f"{path}: line {reader.line_num}: expected "
                    f"{len(expected_header)} fields, got {len(row)}"
                )
            yield reader.line_num, row


def _parse_float(cell: str, path, line_num: int, column: str) -> float:
    try:
        return float(cell)
    except ValueError:
        raise ParseError(
            f"{path}: line {line_num}: {column} is not a number: {cell!r}"
        ) from None


def load_indicator_csv(
    path, subject: str = "", indicator_name: str = ""
) -> IndicatorSeries:
    """Read a student_id,value file in roster order."""
    points = []
    seen = set()
    for line_num, (sid, value) in _rows(path, INDICATOR_HEADER):
        sid = sid.strip()
        if sid in seen:
            raise RosterError(f"{path}: line {line_num}: duplicate student id {sid!r}")
        seen.add(sid)
        points.append((sid, _parse_float(value, path, line_num, "value")))
    if not points:
        raise ParseError(f"{path}: no data rows")
    return IndicatorSeries(
        subject=subject, indicator_name=indicator_name, points=tuple(points)
    )


def load_weights_csv(path) -> dict[str, float]:
    """Read a subject,weight file into a mapping."""
    weights: dict[str, float] = {}
    for line_num, (subject, weight) in _rows(path, WEIGHTS_HEADER):
        subject = subject.strip()
        if subject in weights:
            raise ParseError(f"{path}: line {line_num}: duplicate subject {subject!r}")
        weights[subject] = _parse_float(weight, path, line_num, "weight")
    if not weights:
        raise ParseError(f"{path}: no data rows")
    return weights


def write_calibration_csv(table: CalibrationTable, path) -> None:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CALIBRATION_HEADER)
        for e in table.entries:
            writer.writerow(
                [repr(e.score), repr(e.tail_probability), repr(e.rank_real), e.rank_display]
            )


def load_calibration_csv(path, scale: float = 100.0) -> CalibrationTable:
    """Read a stored calibration table; rows must be in ascending score order."""
    entries = []
    for line_num, row in _rows(path, CALIBRATION_HEADER):
        score, tail, rank_real, rank_display = (
            _parse_float(cell, path, line_num, col)
            for cell, col in zip(row, CALIBRATION_HEADER)
        )
        entries.append(
            CalibrationEntry(
                score=score,
                tail_probability=tail,
                rank_real=rank_real,
                rank_display=int(rank_display),
            )
        )
    if not entries:
        raise ParseError(f"{path}: no data rows")
    return CalibrationTable(entries=tuple(entries), scale=scale)


def _int_and_exact(value: float | None) -> tuple[str, str]:
    if value is None:
        return "", ""
    return str(round_half_away(value)), f"{value:.2f}"


def write_report_csv(report: RatingReport, path) -> None:
    """Write a rating report: integer and 2-decimal columns side by side."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_HEADER)
        for row in report.rows:
            l1, l1_exact = _int_and_exact(row.L1)
            l2, l2_exact = _int_and_exact(row.L2)
            r, r_exact = _int_and_exact(row.R)
            writer.writerow(
                [row.student_id, l1, l1_exact, l2, l2_exact, r, r_exact, row.rank_position]
            )


def load_report_csv(path) -> dict[str, float]:
    """Read the exact composites back from a report: student_id -> R."""
    ratings: dict[str, float] = {}
    for line_num, row in _rows(path, REPORT_HEADER):
        sid = row[0].strip()
        if sid in ratings:
            raise RosterError(f"{path}: line {line_num}: duplicate student id {sid!r}")
        ratings[sid] = _parse_float(row[6], path, line_num, "R_exact")
    if not ratings:
        raise ParseError(f"{path}: no data rows")
    return ratings


def write_curve_csv(path, xs, empirical, fitted) -> None:
    """Dump one indicator's empirical anchors and fitted curve for plotting."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CURVE_HEADER)
        for x, emp, fit in zip(xs, empirical, fitted):
            writer.writerow([repr(float(x)), repr(float(emp)), repr(float(fit))])


def write_overall_csv(rows: Sequence[tuple[str, float, int]], path) -> None:
    """Write the cross-subject rating: (student_id, R, rank) rows."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(OVERALL_HEADER)
        for sid, rating, position in rows:
            r, r_exact = _int_and_exact(rating)
            writer.writerow([sid, r, r_exact, position])
