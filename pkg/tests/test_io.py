"""File formats: headers, parse errors, round trips, determinism."""

from __future__ import annotations

import pytest

from zipfrating import (
    ParseError,
    RatingReport,
    RatingRow,
    RosterError,
    build_calibration,
)
from zipfrating.io import (
    load_calibration_csv,
    load_indicator_csv,
    load_report_csv,
    load_weights_csv,
    write_calibration_csv,
    write_curve_csv,
    write_report_csv,
)

from conftest import PILOT_IQ, TEST_SCORES, write_indicator_csv


class TestIndicatorCsv:
    def test_roster_order_preserved(self, tmp_path):
        path = write_indicator_csv(tmp_path / "tests.csv", TEST_SCORES)
        series = load_indicator_csv(path, subject="french", indicator_name="tests")
        assert list(series.points) == [(sid, float(v)) for sid, v in TEST_SCORES]
        assert series.subject == "french"

    def test_utf8_ids_round_trip(self, tmp_path):
        path = write_indicator_csv(tmp_path / "x.csv", [("Ёж", 5), ("石", 7)])
        series = load_indicator_csv(path)
        assert series.student_ids == ["Ёж", "石"]

    def test_duplicate_id(self, tmp_path):
        path = write_indicator_csv(tmp_path / "x.csv", [("a", 1), ("a", 2)])
        with pytest.raises(RosterError, match="line 3"):
            load_indicator_csv(path)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ParseError):
            load_indicator_csv(path)

    def test_header_only(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("student_id,value\n", encoding="utf-8")
        with pytest.raises(ParseError, match="no data rows"):
            load_indicator_csv(path)

    def test_wrong_header(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("id,score\na,1\n", encoding="utf-8")
        with pytest.raises(ParseError, match="line 1"):
            load_indicator_csv(path)

    def test_bad_value_names_line(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("student_id,value\na,1\nb,oops\n", encoding="utf-8")
        with pytest.raises(ParseError, match="line 3"):
            load_indicator_csv(path)

    def test_wrong_field_count_names_line(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("student_id,value\na,1,9\n", encoding="utf-8")
        with pytest.raises(ParseError, match="line 2"):
            load_indicator_csv(path)


class TestCalibrationCsv:
    def test_round_trip_is_exact(self, tmp_path):
        table = build_calibration(PILOT_IQ)
        path = tmp_path / "table.csv"
        write_calibration_csv(table, path)
        loaded = load_calibration_csv(path)
        assert loaded.entries == table.entries

    def test_serialized_precision(self, tmp_path):
        table = build_calibration(PILOT_IQ)
        path = tmp_path / "table.csv"
        write_calibration_csv(table, path)
        first_row = path.read_text(encoding="utf-8").splitlines()[1]
        rank_field = first_row.split(",")[2]
        digits = sum(c.isdigit() for c in rank_field)
        assert digits >= 10

    def test_out_of_order_rows_rejected(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text(
            "score,tail_probability,rank_real,rank_display\n"
            "120,0.1,1000,1000\n"
            "110,0.2,2000,2000\n",
            encoding="utf-8",
        )
        with pytest.raises(Exception, match="ascending"):
            load_calibration_csv(path)


class TestReportCsv:
    def _report(self):
        return RatingReport(
            subject="french",
            rows=(
                RatingRow("К", 563.046, 154.0, 428.06, 1),
                RatingRow("А", 20.569, 34.94, 25.31, 2),
            ),
        )

    def test_header_and_formatting(self, tmp_path):
        path = tmp_path / "r.csv"
        write_report_csv(self._report(), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "student_id,L1,L1_exact,L2,L2_exact,R,R_exact,rank"
        assert lines[1] == "К,563,563.05,154,154.00,428,428.06,1"

    def test_round_trip_exact_column(self, tmp_path):
        path = tmp_path / "r.csv"
        write_report_csv(self._report(), path)
        assert load_report_csv(path) == {"К": 428.06, "А": 25.31}

    def test_single_indicator_rows_have_empty_l2(self, tmp_path):
        report = RatingReport(
            subject="s", rows=(RatingRow("a", 10.0, None, 10.0, 1),)
        )
        path = tmp_path / "r.csv"
        write_report_csv(report, path)
        assert path.read_text(encoding="utf-8").splitlines()[1] == (
            "a,10,10.00,,,10,10.00,1"
        )

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        write_report_csv(self._report(), a)
        write_report_csv(self._report(), b)
        assert a.read_bytes() == b.read_bytes()


class TestWeightsCsv:
    def test_parse(self, tmp_path):
        path = tmp_path / "w.csv"
        path.write_text("subject,weight\nfrench,3\nmath,1.5\n", encoding="utf-8")
        assert load_weights_csv(path) == {"french": 3.0, "math": 1.5}

    def test_duplicate_subject(self, tmp_path):
        path = tmp_path / "w.csv"
        path.write_text("subject,weight\nx,1\nx,2\n", encoding="utf-8")
        with pytest.raises(ParseError, match="line 3"):
            load_weights_csv(path)


def test_curve_csv(tmp_path):
    path = tmp_path / "c.csv"
    write_curve_csv(path, [6.0, 12.0], [27.0, 38.0], [20.57, 42.92])
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,empirical_Lprime,fitted_L"
    assert lines[1].startswith("6.0,27.0,")
