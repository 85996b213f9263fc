"""Shared fixtures: the ten-student demo cohort used across the suite."""

from __future__ import annotations

import pytest

from zipfrating import IndicatorSeries, build_calibration

# Pilot trait measurements of a group representing the cohort.
PILOT_IQ = [105, 110, 114, 117, 119, 122, 124, 127, 131, 133]

# Roster order is the order the files arrive in; ids are deliberately
# non-ASCII to keep UTF-8 handling honest.
TEST_SCORES = [
    ("А", 6), ("Б", 12), ("В", 15), ("Г", 17), ("Д", 19),
    ("Е", 20), ("Ж", 22), ("З", 25), ("И", 27), ("К", 33),
]
ATTENDANCE = [
    ("А", 3), ("Б", 4), ("В", 6), ("Г", 4), ("Д", 3),
    ("Е", 9), ("Ж", 5), ("З", 7), ("И", 6), ("К", 6),
]

# Strongly left-skewed scores (one straggler below a ceiling-hugging pack)
# and their negation; skewness is odd under negation, so the mirror is
# right-skewed by the same amount.
LEFT_SKEWED_SCORES = [0, 91, 92, 93, 94, 95, 96, 97, 98, 99]
MIRRORED_SCORES = [-v for v in LEFT_SKEWED_SCORES]


@pytest.fixture(scope="session")
def table():
    return build_calibration(PILOT_IQ)


@pytest.fixture()
def tests_series():
    return IndicatorSeries("french", "tests", points=tuple(TEST_SCORES))


@pytest.fixture()
def attendance_series():
    return IndicatorSeries("french", "attendance", points=tuple(ATTENDANCE))


def write_indicator_csv(path, pairs):
    lines = ["student_id,value"] + [f"{sid},{value}" for sid, value in pairs]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
