"""Foreground spreads, x-axis occupancy and connected components, all from runs.

Cost model: every operation here visits each run of the selected rows once;
only the per-column output buffer scales with image width. The optional
WorkCounter records exactly those run visits so the claim is assertable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyRangeError, OutOfBoundsError
from .rle import RleImage, RleRow


class WorkCounter:
    """Counts representation elements visited (runs here, pixels in the baseline)."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int) -> None:
        self.count += n


@dataclass(frozen=True)
class Spread:
    """Inclusive x-interval covered by one foreground run."""

    x_min: int
    x_max: int

    def __post_init__(self):
        if not 0 <= self.x_min <= self.x_max:
            raise ValueError(f"bad spread [{self.x_min}, {self.x_max}]")

    @property
    def length(self) -> int:
        return self.x_max - self.x_min + 1


@dataclass(frozen=True)
class Component:
    """Maximal inclusive x-interval of connected foreground spread."""

    x_min: int
    x_max: int

    def __post_init__(self):
        if not 0 <= self.x_min <= self.x_max:
            raise ValueError(f"bad component [{self.x_min}, {self.x_max}]")

    @property
    def length(self) -> int:
        return self.x_max - self.x_min + 1


@dataclass(frozen=True)
class Gap:
    """Background interval strictly between two components.

    left/right are the bounding ink columns, so the open interval
    (left, right) is all background and width = right - left - 1 >= 1.
    """

    left: int
    right: int

    def __post_init__(self):
        if self.right - self.left - 1 < 1:
            raise ValueError(f"gap between {self.left} and {self.right} has no width")

    @property
    def width(self) -> int:
        return self.right - self.left - 1


@dataclass(frozen=True)
class Occupancy:
    """Per-column booleans: true where any selected row has ink."""

    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if not self.bits:
            raise ValueError("occupancy cannot be zero-width")

    @property
    def width(self) -> int:
        return len(self.bits)


def _check_row_range(height: int, row_range) -> tuple[int, int]:
    start, stop = row_range
    if start < 0 or stop > height:
        raise OutOfBoundsError(f"rows [{start}, {stop}) outside image of height {height}")
    if start >= stop:
        raise EmptyRangeError(f"row range [{start}, {stop}) selects no rows")
    return start, stop


def row_spreads(row: RleRow) -> list[Spread]:
    """One Spread per foreground run, in column order."""
    spreads = []
    pos = 0
    for j, run in enumerate(row.runs):
        if j & 1 and run:
            spreads.append(Spread(pos, pos + run - 1))
        pos += run
    return spreads


def occupancy(rle: RleImage, row_range, counter: WorkCounter | None = None) -> Occupancy:
    """Columnwise OR of foreground coverage over rows [start, stop)."""
    start, stop = _check_row_range(rle.height, row_range)
    bits = [False] * rle.width
    for r in range(start, stop):
        runs = rle.rows[r].runs
        if counter is not None:
            counter.add(len(runs))
        pos = 0
        for j, run in enumerate(runs):
            if j & 1 and run:
                bits[pos : pos + run] = [True] * run
            pos += run
    return Occupancy(tuple(bits))


def column_frequency(rle: RleImage, row_range, counter: WorkCounter | None = None) -> list[int]:
    """Per-column count of inked rows within [start, stop), via a difference array."""
    start, stop = _check_row_range(rle.height, row_range)
    diff = [0] * (rle.width + 1)
    for r in range(start, stop):
        runs = rle.rows[r].runs
        if counter is not None:
            counter.add(len(runs))
        pos = 0
        for j, run in enumerate(runs):
            if j & 1 and run:
                diff[pos] += 1
                diff[pos + run] -= 1
            pos += run
    freq = []
    acc = 0
    for d in diff[:-1]:
        acc += d
        freq.append(acc)
    return freq


def components(occ: Occupancy) -> list[Component]:
    """Maximal true-runs of the occupancy, sorted and pairwise separated."""
    comps = []
    start = None
    for x, b in enumerate(occ.bits):
        if b:
            if start is None:
                start = x
        elif start is not None:
            comps.append(Component(start, x - 1))
            start = None
    if start is not None:
        comps.append(Component(start, occ.width - 1))
    return comps


def gaps(comps: list[Component]) -> list[Gap]:
    """Background gaps between consecutive components."""
    return [Gap(a.x_max, b.x_min) for a, b in zip(comps, comps[1:])]
