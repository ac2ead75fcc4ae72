"""Finite frames of discernment and their subsets encoded as bitmasks.

A frame fixes an ordering of outcome labels; every subset of the frame is
represented by an integer bitmask over that ordering (bit i set means element
i is a member).  Bitmasks give O(1) set algebra and a canonical total order
for deterministic output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

# Downstream consistency checking enumerates the power set, so frame size is
# hard-capped to keep that tractable.
FRAME_SIZE_CAP = 24


class FrameError(ValueError):
    """Invalid frame construction or subset lookup."""


class FrameMismatchError(FrameError):
    """Two subsets from different frames were mixed in one operation."""


@dataclass(frozen=True)
class Frame:
    """An ordered, finite set of distinct outcome labels."""

    elements: tuple[str, ...]
    _index: dict[str, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        if not self.elements:
            raise FrameError("frame must contain at least one element")
        for label in self.elements:
            if not isinstance(label, str) or not label:
                raise FrameError(f"frame labels must be non-empty strings, got {label!r}")
        if len(set(self.elements)) != len(self.elements):
            dupes = sorted({x for x in self.elements if self.elements.count(x) > 1})
            raise FrameError(f"duplicate frame labels: {', '.join(dupes)}")
        object.__setattr__(
            self, "_index", {label: i for i, label in enumerate(self.elements)}
        )

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise FrameError(f"unknown label {label!r}; frame is {list(self.elements)}") from None

    def empty(self) -> FocalSet:
        return FocalSet(self, 0)

    def universe(self) -> FocalSet:
        return FocalSet(self, (1 << self.size) - 1)


@dataclass(frozen=True)
class FocalSet:
    """A subset of one frame, stored as a bitmask of width ``frame.size``."""

    frame: Frame
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.frame.size):
            raise FrameError(
                f"bitmask {self.bits:#x} out of range for frame of size {self.frame.size}"
            )

    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for i, label in enumerate(self.frame.elements) if self.bits >> i & 1
        )

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.frame.index(label) & 1)

    def __and__(self, other: FocalSet) -> FocalSet:
        return intersect(self, other)

    def __or__(self, other: FocalSet) -> FocalSet:
        return union(self, other)

    def __invert__(self) -> FocalSet:
        return complement(self)

    def __le__(self, other: FocalSet) -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def make_frame(labels: Sequence[str], max_size: int = FRAME_SIZE_CAP) -> Frame:
    """Build a frame with the given element ordering.

    Raises FrameError on duplicates, empty input, or more than ``max_size``
    labels.
    """
    labels = tuple(labels)
    if len(labels) > max_size:
        raise FrameError(f"frame of size {len(labels)} exceeds cap of {max_size}")
    return Frame(labels)


def subset(frame: Frame, members: Sequence[str]) -> FocalSet:
    """The subset of ``frame`` containing exactly the listed labels."""
    bits = 0
    for label in members:
        bits |= 1 << frame.index(label)
    return FocalSet(frame, bits)


def _require_same_frame(s: FocalSet, t: FocalSet) -> None:
    if s.frame != t.frame:
        raise FrameMismatchError(
            f"subsets belong to different frames: {list(s.frame.elements)} vs "
            f"{list(t.frame.elements)}"
        )


def intersect(s: FocalSet, t: FocalSet) -> FocalSet:
    _require_same_frame(s, t)
    return FocalSet(s.frame, s.bits & t.bits)


def union(s: FocalSet, t: FocalSet) -> FocalSet:
    _require_same_frame(s, t)
    return FocalSet(s.frame, s.bits | t.bits)


def complement(s: FocalSet) -> FocalSet:
    return FocalSet(s.frame, s.bits ^ (1 << s.frame.size) - 1)


def is_subset(s: FocalSet, t: FocalSet) -> bool:
    _require_same_frame(s, t)
    return s.bits & ~t.bits == 0


def is_empty(s: FocalSet) -> bool:
    return s.bits == 0


def cardinality(s: FocalSet) -> int:
    return s.bits.bit_count()


def enumerate_subsets(frame: Frame) -> Iterator[FocalSet]:
    """All 2**size subsets of the frame, in ascending bitmask order."""
    for bits in range(1 << frame.size):
        yield FocalSet(frame, bits)


def submasks(s: FocalSet) -> Iterator[FocalSet]:
    """All subsets of ``s`` (including the empty set and ``s`` itself)."""
    sub = s.bits
    while True:
        yield FocalSet(s.frame, sub)
        if sub == 0:
            return
        sub = (sub - 1) & s.bits
