"""The joinability tables for the overlap analysis of Q and F_n: row lookup,
pattern rendering, the row checker, and full-table verification (smoke bounds
here; the acceptance tests run the full bounds)."""

import dataclasses

import pytest

from lef.appendix import (
    A_ROWS,
    B_ROWS,
    check_row,
    get_row,
    render_pattern,
    verify_appendix,
)
from lef.presets import Q_SYSTEM, build_fn_system

# rows that admit no assignment at n = 1: every row whose side conditions
# demand an open window like n < alpha - beta < 2n collapses when n = 1
B_EMPTY_AT_N1 = {
    "B5", "B6", "B7", "B10", "B13", "B15", "B16", "B17", "B36", "B38",
    "B43", "B52", "B57", "B58", "B72", "B79", "B81", "B83", "B85", "B88",
    "B90", "B95", "B97", "B100", "B102", "B105", "B107", "B109", "B111",
    "B115", "B116", "B118", "B122", "B124",
}


def test_table_sizes():
    assert len(A_ROWS) == 26
    assert len(B_ROWS) == 125


def test_get_row():
    row = get_row("A3")
    assert row.label == "A3"
    assert (row.first_rule, row.second_rule) == ("q1a", "q6")
    assert row.t == "x c^beta e^gamma x b"
    b79 = get_row("B79")
    assert (b79.first_rule, b79.second_rule) == ("f3", "f10")
    assert b79.t0 == "x c^2n-alpha+beta e x"
    with pytest.raises(KeyError):
        get_row("A99")
    with pytest.raises(KeyError):
        get_row("C1")


def test_row_variables():
    row = get_row("A3")
    assert set(row.variables) == {"beta", "gamma"}


def test_render_pattern():
    assert render_pattern("x a^alpha c^beta+1 x", {"alpha": 2, "beta": 0}, None) \
        == "xaacx"
    assert render_pattern("x e^2n", {}, 2) == "xeeee"
    with pytest.raises(ValueError):
        render_pattern("a^alpha-1", {"alpha": 0}, None)


def test_check_row_single():
    report = check_row(Q_SYSTEM, get_row("A1"), bound=2)
    assert report.instantiable
    assert report.ok
    assert report.distinct <= report.assignments


def test_verify_appendix_a_smoke():
    report = verify_appendix("A", max_exp=2)
    assert report.all_joined
    assert report.rows_instantiable >= 20
    assert report.bound == 2
    lines = report.summary_lines()
    assert len(lines) == 27  # one per row plus the verdict
    assert "all joined" in lines[-1]


def test_verify_appendix_b_n1():
    report = verify_appendix("B", n=1, max_exp=4)
    assert report.all_joined
    assert report.rows_instantiable == 91
    assert set(report.rows_empty) == B_EMPTY_AT_N1
    assert report.bound == 4  # max(max_exp, 2n) = 4 at n = 1
    data = report.as_json()
    assert data["rows_total"] == 125
    assert data["all_joined"] is True


def test_verify_appendix_argument_validation():
    with pytest.raises(ValueError):
        verify_appendix("B")  # needs n
    with pytest.raises(ValueError):
        verify_appendix("A", n=1)  # has no parameter
    with pytest.raises(ValueError):
        verify_appendix("C")


# ---------------------------------------------------------------------------
# transcription regressions: variant cells that circulate in other copies of
# these tables fail mechanically, the adopted cells pass


def test_a3_variant_with_stray_x_fails():
    row = get_row("A3")
    variant = dataclasses.replace(row, t1="x c^beta e^gamma x c x")
    report = check_row(Q_SYSTEM, variant, bound=4)
    assert report.instantiable
    assert report.failure_count == report.distinct == 12
    good = check_row(Q_SYSTEM, row, bound=4)
    assert good.ok and good.distinct == 12


def test_b79_variant_missing_e_fails():
    row = get_row("B79")
    variant = dataclasses.replace(row, t0="x c^2n-alpha+beta x")
    system = build_fn_system(2)
    report = check_row(system, variant, bound=4)
    assert report.instantiable
    assert report.failure_count == report.distinct == 4
    good = check_row(system, row, bound=4)
    assert good.ok and good.distinct == 4
    # the failure evidence names the diverging normal forms
    assert "normal forms differ" in report.failures[0]["problems"][0]
