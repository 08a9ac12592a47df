"""Tests for report assembly and the CSV/JSON encodings."""

import csv
import io
import json
import math

import numpy as np
import pytest

from phasematch.reporting import Report, make_report, render, round_sig, to_csv, to_json


def test_round_sig_twelve_digits():
    assert round_sig(0.9374642995199999) == 0.93746429952
    assert round_sig(1.0) == 1.0
    assert round_sig(-2.5e-17) == -2.5e-17
    assert round_sig(123456789012345.0) == 123456789012000.0


def test_round_sig_passes_non_finite_through():
    assert math.isnan(round_sig(math.nan))
    assert round_sig(math.inf) == math.inf


def test_make_report_normalizes_values():
    report = make_report(
        "demo",
        {"seed": 1, "tolerance": 1e-9},
        [{"x": np.float64(0.25), "z": 1 + 2j, "flag": np.True_, "n": np.int64(3)}],
    )
    row = report.rows[0]
    assert row["x"] == 0.25 and isinstance(row["x"], float)
    assert row["z"] == {"re": 1.0, "im": 2.0}
    assert row["flag"] is True
    assert row["n"] == 3 and isinstance(row["n"], int)


def test_non_finite_floats_become_strings():
    report = make_report("demo", {"seed": 0, "tolerance": 0.0},
                         [{"r": math.inf, "s": math.nan}])
    assert report.rows[0]["r"] == "inf"
    assert report.rows[0]["s"] == "nan"


def test_unsupported_values_rejected():
    with pytest.raises(TypeError):
        make_report("demo", {"seed": 0, "tolerance": 0.0}, [{"x": object()}])


def test_json_schema():
    report = make_report("demo", {"seed": 5, "tolerance": 1e-9}, [{"a": 1}])
    doc = json.loads(to_json(report))
    assert set(doc) == {"command", "metadata", "rows"}
    assert doc["command"] == "demo"
    assert doc["metadata"]["seed"] == 5
    doc = json.loads(to_json(make_report("demo", {"seed": 5, "tolerance": 0.0},
                                         [], passed=True)))
    assert doc["pass"] is True


def test_csv_encoding():
    report = make_report(
        "demo",
        {"seed": 0, "tolerance": 0.0},
        [{"a": 1, "b": True}, {"a": 2, "c": 0.5}],
    )
    text = to_csv(report)
    assert "\r" not in text
    lines = text.splitlines()
    assert lines[0] == "a,b,c"  # union of keys in first-seen order
    assert lines[1] == "1,true,"
    assert lines[2] == "2,,0.5"


def test_csv_and_json_numbers_render_identically():
    rows = [{"value": v} for v in
            (0.1, 2 / 3, 1.003405056579, 9.87654321e-13, 1e300)]
    report = make_report("demo", {"seed": 0, "tolerance": 1e-9}, rows)
    json_numbers = [
        json.dumps(row["value"]) for row in json.loads(to_json(report))["rows"]
    ]
    reader = csv.DictReader(io.StringIO(to_csv(report)))
    csv_numbers = [row["value"] for row in reader]
    assert json_numbers == csv_numbers


def test_render_dispatch_and_determinism():
    report = make_report("demo", {"seed": 0, "tolerance": 0.0}, [{"a": 1}])
    assert render(report, "json") == to_json(report)
    assert render(report, "csv") == to_csv(report)
    assert render(report, "json") == render(report, "json")
    with pytest.raises(ValueError):
        render(report, "yaml")


def test_report_is_frozen():
    report = make_report("demo", {"seed": 0, "tolerance": 0.0}, [])
    with pytest.raises(AttributeError):
        report.command = "other"
    assert isinstance(report, Report)
