"""Check registry and aggregate report."""

import json
from fractions import Fraction

from lerchkit.suite import (
    GRID_NOTES,
    json_safe,
    run_suite,
    suite_check_names,
)


def test_full_suite_is_green():
    report = run_suite()
    assert report.fail_count == 0, [
        c.describe() for c in report.checks if not c.passed
    ]
    assert report.pass_count == 571
    assert report.ok


def test_registry_names_are_documented():
    names = set(suite_check_names())
    # one note per check family
    for name in names:
        assert any(name.startswith(k) or k.startswith(name.split("_")[0])
                   for k in GRID_NOTES) or name in GRID_NOTES, name


def test_filter_selects_subset():
    sub = run_suite(filter_glob="beta_recurrence")
    assert 0 < sub.pass_count + sub.fail_count < 571
    assert all(c.name == "beta_recurrence" for c in sub.checks)


def test_report_dict_is_json_ready():
    report = run_suite(filter_glob="reflection_*")
    doc = report.to_dict()
    text = json.dumps(doc)  # must not raise
    parsed = json.loads(text)
    assert parsed["pass_count"] == report.pass_count
    assert len(parsed["checks"]) == len(report.checks)


def test_checks_are_sorted_deterministically():
    a = run_suite(filter_glob="series_*").to_dict()["checks"]
    b = run_suite(filter_glob="series_*").to_dict()["checks"]
    assert a == b
    names = [c["name"] for c in a]
    assert names == sorted(names)


def test_json_safe_handles_domain_types():
    blob = json_safe(
        {"z": complex(1.5, -2.0), "q": Fraction(3, 7), "xs": [1j, 2.0]}
    )
    assert blob["z"] == [1.5, -2.0]
    assert blob["q"] == "3/7"
    assert blob["xs"] == [[0.0, 1.0], 2.0]
    json.dumps(blob)


def test_tolerance_override_replaces_defaults():
    loose = run_suite(filter_glob="master_euler", tolerance=1e-3)
    assert loose.fail_count == 0
    assert all(c.tol == 1e-3 for c in loose.checks)
