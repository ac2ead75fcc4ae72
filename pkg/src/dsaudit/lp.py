"""Exact linear programming over rationals.

A small two-phase primal simplex working entirely in `fractions.Fraction`.
Bland's rule is used for both the entering and leaving choices, which rules
out cycling, so the solver terminates on every input.  Degenerate and
redundant constraints are tolerated; redundant rows left over from phase one
are dropped.

Intended for the small, dense systems produced by probability-bounds
checking; no sparsity or revised-simplex machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence


class Sense(Enum):
    LE = "<="
    GE = ">="
    EQ = "=="


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearConstraint:
    """coeffs . x  (sense)  rhs, with an optional provenance tag."""

    coeffs: tuple[Fraction, ...]
    sense: Sense
    rhs: Fraction
    tag: str = ""

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        lhs = sum(c * x for c, x in zip(self.coeffs, point))
        if self.sense is Sense.LE:
            return lhs <= self.rhs
        if self.sense is Sense.GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LPSolution:
    status: LPStatus
    value: Fraction | None
    point: tuple[Fraction, ...] | None


_FLIP = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}


def _pivot(rows: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = rows[r][c]
    rows[r] = [v / piv for v in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            factor = row[c]
            rows[i] = [v - factor * p for v, p in zip(row, rows[r])]
    basis[r] = c


def _reduced_costs(
    rows: list[list[Fraction]], basis: list[int], cost: list[Fraction]
) -> list[Fraction]:
    """Row of reduced costs c_j - c_B . B^-1 A_j for the current basis."""
    reduced = list(cost) + [Fraction(0)]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb != 0:
            reduced = [r - cb * v for r, v in zip(reduced, rows[i])]
    return reduced


def _run_simplex(
    rows: list[list[Fraction]],
    basis: list[int],
    cost: list[Fraction],
    allowed: Sequence[int],
) -> LPStatus:
    """Minimize cost over the tableau in place. Bland's rule throughout."""
    reduced = _reduced_costs(rows, basis, cost)
    while True:
        entering = None
        for j in allowed:
            if reduced[j] < 0:
                entering = j
                break
        if entering is None:
            return LPStatus.OPTIMAL
        leaving = None
        best_ratio: Fraction | None = None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            return LPStatus.UNBOUNDED
        _pivot(rows, basis, leaving, entering)
        factor = reduced[entering]
        if factor != 0:
            reduced = [r - factor * v for r, v in zip(reduced, rows[leaving])]


def minimize(
    objective: Sequence[Fraction],
    constraints: Sequence[LinearConstraint],
    num_vars: int,
) -> LPSolution:
    """Minimize objective . x subject to the constraints and x >= 0."""
    obj = [Fraction(c) for c in objective]
    if len(obj) != num_vars:
        raise ValueError("objective length does not match num_vars")

    normalized: list[tuple[list[Fraction], Sense, Fraction]] = []
    for con in constraints:
        if len(con.coeffs) != num_vars:
            raise ValueError(f"constraint width mismatch: {con}")
        coeffs = [Fraction(c) for c in con.coeffs]
        rhs = Fraction(con.rhs)
        sense = con.sense
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            sense = _FLIP[sense]
        normalized.append((coeffs, sense, rhs))

    n_slack = sum(1 for _, s, _ in normalized if s is not Sense.EQ)
    n_art = sum(1 for _, s, _ in normalized if s is not Sense.LE)
    n_cols = num_vars + n_slack + n_art
    art_start = num_vars + n_slack

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    slack_col = num_vars
    art_col = art_start
    for coeffs, sense, rhs in normalized:
        row = [Fraction(0)] * (n_cols + 1)
        row[:num_vars] = coeffs
        row[-1] = rhs
        if sense is Sense.LE:
            row[slack_col] = Fraction(1)
            basis.append(slack_col)
            slack_col += 1
        elif sense is Sense.GE:
            row[slack_col] = Fraction(-1)
            slack_col += 1
            row[art_col] = Fraction(1)
            basis.append(art_col)
            art_col += 1
        else:
            row[art_col] = Fraction(1)
            basis.append(art_col)
            art_col += 1
        rows.append(row)

    structural = list(range(art_start))

    if n_art:
        cost1 = [Fraction(0)] * n_cols
        for j in range(art_start, n_cols):
            cost1[j] = Fraction(1)
        status = _run_simplex(rows, basis, cost1, range(n_cols))
        if status is not LPStatus.OPTIMAL:
            raise AssertionError("phase one cannot be unbounded")
        residual = sum(cost1[basis[i]] * rows[i][-1] for i in range(len(rows)))
        if residual != 0:
            return LPSolution(LPStatus.INFEASIBLE, None, None)
        # Drive leftover artificials out of the basis; drop redundant rows.
        for i in reversed(range(len(rows))):
            if basis[i] >= art_start:
                pivot_col = next(
                    (j for j in structural if rows[i][j] != 0), None
                )
                if pivot_col is None:
                    del rows[i]
                    del basis[i]
                else:
                    _pivot(rows, basis, i, pivot_col)

    cost2 = [Fraction(0)] * n_cols
    cost2[:num_vars] = obj
    status = _run_simplex(rows, basis, cost2, structural)
    if status is LPStatus.UNBOUNDED:
        return LPSolution(LPStatus.UNBOUNDED, None, None)

    point = [Fraction(0)] * num_vars
    for i, b in enumerate(basis):
        if b < num_vars:
            point[b] = rows[i][-1]
    value = sum(c * x for c, x in zip(obj, point))
    return LPSolution(LPStatus.OPTIMAL, value, tuple(point))


def maximize(
    objective: Sequence[Fraction],
    constraints: Sequence[LinearConstraint],
    num_vars: int,
) -> LPSolution:
    """Maximize objective . x subject to the constraints and x >= 0."""
    sol = minimize([-Fraction(c) for c in objective], constraints, num_vars)
    if sol.status is not LPStatus.OPTIMAL:
        return sol
    assert sol.value is not None
    return LPSolution(LPStatus.OPTIMAL, -sol.value, sol.point)
