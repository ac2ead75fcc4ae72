"""Parametric two-body families, exact grid sweeps, and classic fixtures.

Two families over the frame {a, b, c} are built in:

* partition-xy: A = {{a}: x, {b,c}: 1-x}, B = {{a,b}: y, {c}: 1-y}.
  Combination is consistent with the derived probabilities exactly when
  x = 0 or y = 1, equivalently kappa = 0.
* quasi-x-xbar-y: A = {{a}: x, {b,c}: xbar, omega: 1-x-xbar}, same B.
  The forced equality on the {c} cell, 1-y = (1-x)(1-y)/(1-x(1-y)), holds
  exactly when x = 0, y = 0, or y = 1.

Grid points are exact rationals i/N, so both characterizations are decidable
equalities at every point.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .combine import TotalConflictError, combine
from .consistency import (
    ConsistencyReport,
    ProbabilityInterval,
    Verdict,
    audit,
)
from .evidence import BodyOfEvidence, make_body
from .frames import FocalSet, make_frame, subset


class Family(Enum):
    PARTITION_XY = "PartitionXY"
    QUASI_X_XBAR_Y = "QuasiXXbarY"
    CUSTOM = "Custom"


DEFAULT_XBAR_SLICES: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)


def family_frame():
    return make_frame(["a", "b", "c"])


@dataclass(frozen=True)
class FamilySpec:
    """A point in one of the parametric families (or a custom body pair)."""

    family: Family
    x: Fraction | None = None
    xbar: Fraction | None = None
    y: Fraction | None = None
    bodies: tuple[BodyOfEvidence, BodyOfEvidence] | None = None

    def __post_init__(self) -> None:
        if self.family is Family.PARTITION_XY:
            if self.x is None or self.y is None or self.xbar is not None:
                raise ValueError("partition-xy takes parameters x and y only")
            if not (0 <= self.x <= 1 and 0 <= self.y <= 1):
                raise ValueError(f"x={self.x}, y={self.y} outside [0, 1]")
        elif self.family is Family.QUASI_X_XBAR_Y:
            if self.x is None or self.xbar is None or self.y is None:
                raise ValueError("quasi-x-xbar-y takes parameters x, xbar, and y")
            if self.x < 0 or self.xbar < 0 or self.x + self.xbar > 1:
                raise ValueError(f"need x, xbar >= 0 and x + xbar <= 1, got {self.x}, {self.xbar}")
            if not 0 <= self.y <= 1:
                raise ValueError(f"y={self.y} outside [0, 1]")
        else:
            if self.bodies is None or len(self.bodies) != 2:
                raise ValueError("custom spec requires exactly two bodies")


def partition_spec(x: Fraction, y: Fraction) -> FamilySpec:
    return FamilySpec(Family.PARTITION_XY, x=Fraction(x), y=Fraction(y))


def quasi_spec(x: Fraction, xbar: Fraction, y: Fraction) -> FamilySpec:
    return FamilySpec(
        Family.QUASI_X_XBAR_Y, x=Fraction(x), xbar=Fraction(xbar), y=Fraction(y)
    )


def instantiate(spec: FamilySpec) -> tuple[BodyOfEvidence, BodyOfEvidence]:
    """The two bodies at the spec's parameter point; zero masses drop out."""
    if spec.family is Family.CUSTOM:
        assert spec.bodies is not None
        return spec.bodies
    frame = family_frame()
    a = subset(frame, ["a"])
    bc = subset(frame, ["b", "c"])
    ab = subset(frame, ["a", "b"])
    c = subset(frame, ["c"])
    omega = frame.universe()
    assert spec.x is not None and spec.y is not None
    if spec.family is Family.PARTITION_XY:
        body_a = make_body(frame, [(a, spec.x), (bc, 1 - spec.x)])
    else:
        assert spec.xbar is not None
        body_a = make_body(
            frame, [(a, spec.x), (bc, spec.xbar), (omega, 1 - spec.x - spec.xbar)]
        )
    body_b = make_body(frame, [(ab, spec.y), (c, 1 - spec.y)])
    return body_a, body_b


def closed_form_masses(spec: FamilySpec) -> dict[FocalSet, Fraction]:
    """Closed-form combined masses at the parameter point (nonzero only).

    Raises TotalConflictError where the family degenerates (x=1, y=0).
    """
    if spec.family is Family.CUSTOM:
        raise ValueError("no closed forms for custom body pairs")
    assert spec.x is not None and spec.y is not None
    x, y = spec.x, spec.y
    denom = 1 - x * (1 - y)
    if denom == 0:
        raise TotalConflictError("total conflict (kappa = 1) at x=1, y=0")
    frame = family_frame()
    if spec.family is Family.PARTITION_XY:
        cells = {
            subset(frame, ["a"]): x * y / denom,
            subset(frame, ["b"]): (1 - x) * y / denom,
            subset(frame, ["c"]): (1 - x) * (1 - y) / denom,
        }
    else:
        assert spec.xbar is not None
        xbar = spec.xbar
        cells = {
            subset(frame, ["a"]): x * y / denom,
            subset(frame, ["b"]): xbar * y / denom,
            subset(frame, ["c"]): (1 - x) * (1 - y) / denom,
            subset(frame, ["a", "b"]): (1 - x - xbar) * y / denom,
        }
    return {s: m for s, m in cells.items() if m != 0}


def symbolic_check(
    spec: FamilySpec,
) -> tuple[dict[FocalSet, Fraction], BodyOfEvidence]:
    """Evaluate the closed forms and assert they equal combine()'s output.

    Returns (closed-form masses, combined body).  A mismatch is an internal
    consistency failure and raises AssertionError.
    """
    expected = closed_form_masses(spec)
    result = combine(*instantiate(spec))
    actual = {s: m for s, m in result.combined.focal}
    if actual != expected:
        raise AssertionError(
            f"closed forms disagree with combination at {spec}: "
            f"expected {expected}, got {actual}"
        )
    expected_kappa = spec.x * (1 - spec.y)  # type: ignore[operator]
    if result.kappa != expected_kappa:
        raise AssertionError(
            f"kappa {result.kappa} differs from closed form {expected_kappa}"
        )
    return expected, result.combined


def quasi_balance_equation_holds(x: Fraction, y: Fraction) -> bool | None:
    """Whether 1-y equals (1-x)(1-y)/(1-x(1-y)) exactly.

    Returns None at the degenerate point x=1, y=0 where the right-hand side
    is undefined (kappa = 1).
    """
    denom = 1 - x * (1 - y)
    if denom == 0:
        return None
    return 1 - y == (1 - x) * (1 - y) / denom


@dataclass(frozen=True)
class SweepRow:
    element: FocalSet
    ds_lower: Fraction | None
    ds_upper: Fraction | None
    prob: ProbabilityInterval | None
    verdict: Verdict | None  # None marks a total-conflict grid point


@dataclass(frozen=True)
class SweepPoint:
    x: Fraction
    xbar: Fraction | None
    y: Fraction
    kappa: Fraction
    total_conflict: bool
    rows: tuple[SweepRow, ...]

    def all_exact(self) -> bool:
        return not self.total_conflict and all(
            r.verdict is Verdict.EXACT_MATCH for r in self.rows
        )


@dataclass(frozen=True)
class SweepResult:
    family: Family
    grid_density: int
    points: tuple[SweepPoint, ...]
    consistent: tuple[SweepPoint, ...]


def _grid(n: int) -> list[Fraction]:
    return [Fraction(i, n) for i in range(n + 1)]


def _evaluate_point(spec: FamilySpec) -> SweepPoint:
    frame = family_frame()
    singletons = [FocalSet(frame, 1 << i) for i in range(frame.size)]
    assert spec.x is not None and spec.y is not None
    try:
        report = audit(list(instantiate(spec)))
    except TotalConflictError:
        rows = tuple(SweepRow(s, None, None, None, None) for s in singletons)
        return SweepPoint(spec.x, spec.xbar, spec.y, Fraction(1), True, rows)
    rows = tuple(
        SweepRow(f.subset, f.ds_lower, f.ds_upper, f.prob, f.verdict)
        for f in report.findings
    )
    return SweepPoint(spec.x, spec.xbar, spec.y, report.kappa, False, rows)


def sweep(
    family: Family,
    grid_density: int,
    xbar_slices: Sequence[Fraction] = DEFAULT_XBAR_SLICES,
    full_3d: bool = False,
) -> SweepResult:
    """Audit every grid point i/N of the family's parameter space.

    The quasi family is swept per xbar slice (or over the full 3-D grid when
    ``full_3d``); points violating x + xbar <= 1 are skipped.  Points are
    visited in canonical grid order, so output is deterministic.
    """
    if grid_density < 2:
        raise ValueError("grid density must be at least 2")
    if family is Family.CUSTOM:
        raise ValueError("sweep requires a parametric family")
    steps = _grid(grid_density)
    points: list[SweepPoint] = []
    if family is Family.PARTITION_XY:
        for x in steps:
            for y in steps:
                points.append(_evaluate_point(partition_spec(x, y)))
    else:
        slices = steps if full_3d else [Fraction(s) for s in xbar_slices]
        for xbar in slices:
            for x in steps:
                if x + xbar > 1:
                    continue
                for y in steps:
                    points.append(_evaluate_point(quasi_spec(x, xbar, y)))
    consistent = tuple(p for p in points if p.all_exact())
    return SweepResult(family, grid_density, tuple(points), consistent)


def _frac(value: Fraction | None) -> str:
    return "" if value is None else str(value)


def sweep_to_csv(result: SweepResult) -> str:
    """Render a sweep as CSV with one row per grid point and element.

    Columns: family, x, xbar, y, kappa, element, ds_lo, ds_hi, p_lo, p_hi,
    verdict.  All numbers are exact fraction strings; a footer of comment
    lines lists the all-ExactMatch points.  Output is byte-deterministic.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["family", "x", "xbar", "y", "kappa", "element",
         "ds_lo", "ds_hi", "p_lo", "p_hi", "verdict"]
    )
    for point in result.points:
        for row in point.rows:
            prob = row.prob
            writer.writerow(
                [
                    result.family.value,
                    str(point.x),
                    _frac(point.xbar),
                    str(point.y),
                    str(point.kappa),
                    str(row.element),
                    _frac(row.ds_lower),
                    _frac(row.ds_upper),
                    _frac(prob.lower) if prob is not None else "",
                    _frac(prob.upper) if prob is not None else "",
                    row.verdict.value if row.verdict is not None else "TotalConflict",
                ]
            )
    buf.write("# consistent points (all verdicts ExactMatch):\n")
    for point in result.consistent:
        coords = f"x={point.x}"
        if point.xbar is not None:
            coords += f",xbar={point.xbar}"
        coords += f",y={point.y}"
        buf.write(f"# {coords}\n")
    return buf.getvalue()


def zadeh_fixture() -> ConsistencyReport:
    """The classic near-contradictory pair: almost all mass on different
    singletons, a sliver of agreement on a third.

    Combination concentrates everything on the sliver ({c} gets mass 1 with
    kappa = 9999/10000); the probability constraint system derived from the
    same two bodies is infeasible.  Both facts are asserted here.
    """
    frame = make_frame(["a", "b", "c"])
    first = make_body(
        frame,
        [(subset(frame, ["a"]), Fraction(99, 100)), (subset(frame, ["c"]), Fraction(1, 100))],
    )
    second = make_body(
        frame,
        [(subset(frame, ["b"]), Fraction(99, 100)), (subset(frame, ["c"]), Fraction(1, 100))],
    )
    report = audit([first, second])
    expected = make_body(frame, [(subset(frame, ["c"]), Fraction(1))])
    if report.combined != expected:
        raise AssertionError(f"expected combined body {{c}}:1, got {report.combined}")
    if report.kappa != Fraction(9999, 10000):
        raise AssertionError(f"expected kappa 9999/10000, got {report.kappa}")
    return report
