"""Belief and plausibility measures, and exact mass recovery from belief.

Belief of a set is the total mass of focal sets contained in it; plausibility
is the total mass of focal sets meeting it.  The two are dual through the
complement, and the mass assignment can be recovered from a complete belief
table by alternating-sign subset sums (Mobius inversion).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .evidence import BodyOfEvidence, EvidenceError, make_body
from .frames import FocalSet, Frame, FrameMismatchError, enumerate_subsets, submasks


class MeasureKind(Enum):
    BELIEF = "Belief"
    PLAUSIBILITY = "Plausibility"


@dataclass(frozen=True)
class MeasureTable:
    """Measure values for every subset of a frame."""

    frame: Frame
    kind: MeasureKind
    values: Mapping[FocalSet, Fraction]


class InversionError(ValueError):
    """A table passed to mass_from_belief is not a valid belief function."""

    def __init__(self, message: str, subset: FocalSet | None = None):
        super().__init__(message)
        self.subset = subset


def _check_frame(body: BodyOfEvidence, s: FocalSet) -> None:
    if s.frame != body.frame:
        raise FrameMismatchError(f"subset {s} is not on the body's frame")


def belief(body: BodyOfEvidence, s: FocalSet) -> Fraction:
    """Total mass of focal sets contained in ``s``."""
    _check_frame(body, s)
    total = Fraction(0)
    for t, m in body.focal:
        if t.bits & ~s.bits == 0:
            total += m
    return total


def plausibility(body: BodyOfEvidence, s: FocalSet) -> Fraction:
    """Total mass of focal sets having non-empty intersection with ``s``."""
    _check_frame(body, s)
    total = Fraction(0)
    for t, m in body.focal:
        if t.bits & s.bits:
            total += m
    return total


def measure_table(body: BodyOfEvidence, kind: MeasureKind) -> MeasureTable:
    """Evaluate belief or plausibility on all 2**size subsets."""
    fn = belief if kind is MeasureKind.BELIEF else plausibility
    values = {s: fn(body, s) for s in enumerate_subsets(body.frame)}
    return MeasureTable(body.frame, kind, values)


def mass_from_belief(table: MeasureTable) -> BodyOfEvidence:
    """Recover the unique mass assignment underlying a belief table.

    m(A) = sum over B subset-of A of (-1)^|A-B| * bel(B), evaluated over all
    subsets of each A (non-focal subsets contribute belief terms but carry
    zero recovered mass, so this agrees with summing over focal sets only).

    Raises InversionError, naming the offending subset where one exists, if
    the table is not a belief function: incomplete, wrong endpoints, a
    negative recovered mass, or recovered masses not summing to 1.
    """
    if table.kind is not MeasureKind.BELIEF:
        raise InversionError(f"expected a Belief table, got {table.kind.value}")
    frame = table.frame
    values = dict(table.values)
    for s in enumerate_subsets(frame):
        if s not in values:
            raise InversionError(f"table has no value for {s}", subset=s)
    empty = frame.empty()
    omega = frame.universe()
    if values[empty] != 0:
        raise InversionError(
            f"belief of the empty set must be 0, got {values[empty]}", subset=empty
        )
    if values[omega] != 1:
        raise InversionError(
            f"belief of the whole frame must be 1, got {values[omega]}", subset=omega
        )

    assignments: list[tuple[FocalSet, Fraction]] = []
    for s in enumerate_subsets(frame):
        if s.bits == 0:
            continue
        size_s = s.bits.bit_count()
        m = Fraction(0)
        for sub in submasks(s):
            sign = -1 if (size_s - sub.bits.bit_count()) & 1 else 1
            m += sign * values[sub]
        if m < 0:
            raise InversionError(
                f"recovered mass of {s} is negative ({m}); not a belief function",
                subset=s,
            )
        if m > 0:
            assignments.append((s, m))
    try:
        return make_body(frame, assignments)
    except EvidenceError as exc:
        raise InversionError(f"recovered masses do not form a body: {exc}") from exc
