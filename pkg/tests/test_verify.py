from __future__ import annotations

import pytest

from beattymatch import Family
from beattymatch.verify import SUITES, default_units, render_report, run_suites


def test_default_grid_composition():
    grid = default_units()
    assert [(u.family, u.m) for u in grid] == [
        (Family.PLUS, 1),
        (Family.PLUS, 2),
        (Family.PLUS, 3),
        (Family.MINUS, 3),
        (Family.MINUS, 4),
        (Family.MINUS, 5),
    ]


def test_all_suites_pass_on_small_grid():
    results = run_suites(i_max=5, window=400, freq_n=4000, freq_tol=5e-3, b_span=60)
    assert [r.name for r in results] == list(SUITES)
    for r in results:
        assert r.passed, (r.name, r.failures)
        assert r.checked > 0


def test_suite_selection_order_is_canonical():
    results = run_suites(names=["set-equivalence", "range-law"], i_max=3, window=100)
    assert [r.name for r in results] == ["set-equivalence", "range-law"]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(names=["no-such-suite"])


def test_fault_injection_breaks_equivalence_only():
    results = run_suites(
        names=["range-law", "criterion-equivalence", "set-equivalence"],
        i_max=4,
        window=120,
        fault_j=0,
    )
    by_name = {r.name: r for r in results}
    assert by_name["range-law"].passed
    assert by_name["set-equivalence"].passed
    assert not by_name["criterion-equivalence"].passed
    assert by_name["criterion-equivalence"].failures > 0


def test_report_shape():
    results = run_suites(names=["power-identities"], i_max=4)
    text = render_report(results)
    lines = text.splitlines()
    assert lines[0].startswith("suite")
    assert any("power-identities" in line and "PASS" in line for line in lines)
    assert lines[-1] == "overall: PASS"


def test_report_marks_failures():
    results = run_suites(names=["criterion-equivalence"], i_max=3, window=80, fault_j=5)
    text = render_report(results)
    assert "FAIL" in text
    assert text.strip().endswith("overall: FAIL")
