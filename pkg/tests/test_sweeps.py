"""Parametric families, closed forms, grid sweeps, and the classic fixtures."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsaudit import (
    Family,
    TotalConflictError,
    Verdict,
    classify,
    closed_form_masses,
    instantiate,
    make_frame,
    partition_spec,
    quasi_balance_equation_holds,
    quasi_spec,
    subset,
    sweep,
    sweep_to_csv,
    symbolic_check,
    zadeh_fixture,
)
from dsaudit.evidence import StructureTag

F = Fraction


def test_instantiate_partition_point():
    a, b = instantiate(partition_spec(F(1, 4), F(1, 2)))
    frame = a.frame
    assert a.mass_of(subset(frame, ["a"])) == F(1, 4)
    assert a.mass_of(subset(frame, ["b", "c"])) == F(3, 4)
    assert b.mass_of(subset(frame, ["a", "b"])) == F(1, 2)
    assert classify(a).tag is StructureTag.PARTITION


def test_instantiate_quasi_point():
    a, b = instantiate(quasi_spec(F(1, 4), F(1, 2), F(1, 2)))
    frame = a.frame
    assert a.mass_of(frame.universe()) == F(1, 4)
    assert classify(a).tag is StructureTag.QUASI_PARTITION
    assert classify(b).tag is StructureTag.PARTITION


def test_instantiate_drops_zero_masses():
    a, _ = instantiate(partition_spec(F(0), F(1, 3)))
    frame = a.frame
    assert a.focal_sets() == (subset(frame, ["b", "c"]),)


def test_spec_validation():
    with pytest.raises(ValueError):
        partition_spec(F(5, 4), F(1, 2))
    with pytest.raises(ValueError):
        quasi_spec(F(3, 4), F(1, 2), F(1, 2))  # x + xbar > 1


def test_closed_forms_partition_example():
    forms = closed_form_masses(partition_spec(F(1, 4), F(1, 2)))
    frame = make_frame(["a", "b", "c"])
    assert forms == {
        subset(frame, ["a"]): F(1, 7),
        subset(frame, ["b"]): F(3, 7),
        subset(frame, ["c"]): F(3, 7),
    }


def test_closed_forms_quasi_example():
    forms = closed_form_masses(quasi_spec(F(1, 4), F(1, 2), F(1, 2)))
    frame = make_frame(["a", "b", "c"])
    assert forms[subset(frame, ["a", "b"])] == F(1, 7)
    assert forms[subset(frame, ["c"])] == F(3, 7)


def test_closed_forms_degenerate_point_is_total_conflict():
    with pytest.raises(TotalConflictError):
        closed_form_masses(partition_spec(F(1), F(0)))


def test_symbolic_check_agrees_at_boundary():
    forms, combined = symbolic_check(partition_spec(F(0), F(1, 3)))
    frame = combined.frame
    assert forms == {
        subset(frame, ["b"]): F(1, 3),
        subset(frame, ["c"]): F(2, 3),
    }


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12))
def test_symbolic_check_partition_on_grid(i, j):
    x, y = F(i, 12), F(j, 12)
    if x == 1 and y == 0:
        with pytest.raises(TotalConflictError):
            symbolic_check(partition_spec(x, y))
        return
    forms, combined = symbolic_check(partition_spec(x, y))
    assert sum(forms.values()) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_symbolic_check_quasi_on_grid(i, k, j):
    x, xbar, y = F(i, 8), F(k, 8), F(j, 8)
    if x + xbar > 1:
        return
    if x == 1 and y == 0:
        return
    forms, combined = symbolic_check(quasi_spec(x, xbar, y))
    assert sum(forms.values()) == 1


def test_quasi_balance_equation_region():
    grid = [F(i, 6) for i in range(7)]
    for x in grid:
        for y in grid:
            held = quasi_balance_equation_holds(x, y)
            if x == 1 and y == 0:
                assert held is None
            else:
                assert held == (x == 0 or y == 0 or y == 1)


def test_partition_sweep_small_grid():
    result = sweep(Family.PARTITION_XY, 4)
    assert len(result.points) == 25
    assert sum(len(p.rows) for p in result.points) == 75
    consistent = {(p.x, p.y) for p in result.consistent}
    expected = {(F(0), F(i, 4)) for i in range(5)} | {(F(i, 4), F(1)) for i in range(5)}
    assert consistent == expected
    assert len(consistent) == 9
    # consistency coincides with zero conflict
    assert {(p.x, p.y) for p in result.points if p.kappa == 0} == expected


def test_partition_sweep_total_conflict_point():
    result = sweep(Family.PARTITION_XY, 4)
    tc = [p for p in result.points if p.total_conflict]
    assert [(p.x, p.y) for p in tc] == [(F(1), F(0))]
    assert tc[0].kappa == 1
    assert all(r.verdict is None for r in tc[0].rows)


def test_sweep_kappa_matches_closed_form():
    result = sweep(Family.PARTITION_XY, 3)
    for p in result.points:
        assert p.kappa == p.x * (1 - p.y)


def test_quasi_sweep_slice():
    result = sweep(Family.QUASI_X_XBAR_Y, 2, xbar_slices=[F(1, 2)])
    # x in {0, 1/2} (x=1 excluded by x+xbar<=1), y in {0, 1/2, 1}
    assert {(p.x, p.y) for p in result.points} == {
        (F(i, 2), F(j, 2)) for i in range(2) for j in range(3)
    }
    assert all(p.xbar == F(1, 2) for p in result.points)
    # All-ExactMatch needs every cell to be a matching point, which the
    # leftover uncertainty mass prevents except where combination collapses:
    # (0,0) sends everything to {c}; (1/2,1) has no uncertainty mass left.
    consistent = {(p.x, p.y) for p in result.consistent}
    assert consistent == {(F(0), F(0)), (F(1, 2), F(1))}
    # At x=0, y=1/2 the combined body keeps an {a,b} block: the point cells
    # match exactly and the singleton cells are properly interval-valued.
    mixed = next(p for p in result.points if p.x == 0 and p.y == F(1, 2))
    verdicts = {str(r.element): r.verdict for r in mixed.rows}
    assert verdicts["{a,b}"] is Verdict.EXACT_MATCH
    assert verdicts["{c}"] is Verdict.EXACT_MATCH
    assert verdicts["{a}"] is Verdict.COMPATIBLE
    assert verdicts["{b}"] is Verdict.COMPATIBLE


def test_quasi_sweep_c_cell_pattern():
    # The forced-equality cell {c} matches exactly iff x=0 or y=1; at y=0
    # with x>0 the constraint system is contradictory instead.
    result = sweep(Family.QUASI_X_XBAR_Y, 4, xbar_slices=[F(1, 2)])
    frame = make_frame(["a", "b", "c"])
    c = subset(frame, ["c"])
    for p in result.points:
        verdict = next(r.verdict for r in p.rows if r.element == c)
        if p.x == 0 or p.y == 1:
            assert verdict is Verdict.EXACT_MATCH
        elif p.y == 0:
            assert verdict is Verdict.INFEASIBLE
        else:
            assert verdict is not Verdict.EXACT_MATCH


def test_quasi_sweep_y_zero_with_positive_x_is_infeasible():
    result = sweep(Family.QUASI_X_XBAR_Y, 2, xbar_slices=[F(1, 2)])
    point = next(p for p in result.points if p.x == F(1, 2) and p.y == 0)
    assert not point.total_conflict
    assert all(r.verdict is Verdict.INFEASIBLE for r in point.rows)


def test_zero_conflict_points_never_verdict_disjoint():
    partition = sweep(Family.PARTITION_XY, 4)
    quasi = sweep(Family.QUASI_X_XBAR_Y, 4, xbar_slices=[F(0), F(1, 2)])
    for result in (partition, quasi):
        for p in result.points:
            if p.kappa == 0:
                assert all(
                    r.verdict is not Verdict.DISJOINT_VIOLATION for r in p.rows
                ), (p.x, p.xbar, p.y)


def test_sweep_rejects_bad_input():
    with pytest.raises(ValueError):
        sweep(Family.PARTITION_XY, 1)
    with pytest.raises(ValueError):
        sweep(Family.CUSTOM, 4)


def test_sweep_csv_deterministic_and_well_formed():
    result = sweep(Family.PARTITION_XY, 2)
    text1 = sweep_to_csv(result)
    text2 = sweep_to_csv(sweep(Family.PARTITION_XY, 2))
    assert text1 == text2
    lines = text1.splitlines()
    assert lines[0] == "family,x,xbar,y,kappa,element,ds_lo,ds_hi,p_lo,p_hi,verdict"
    data = [ln for ln in lines[1:] if not ln.startswith("#")]
    assert len(data) == 9 * 3
    assert any(ln.startswith("# consistent points") for ln in lines)
    # exact fraction strings only, never floats
    assert "." not in text1.replace("...", "")


def test_zadeh_fixture_report():
    report = zadeh_fixture()
    frame = report.combined.frame
    assert report.combined.mass_of(subset(frame, ["c"])) == 1
    assert report.kappa == F(9999, 10000)
    assert not report.feasible
    assert all(f.verdict is Verdict.INFEASIBLE for f in report.findings)
