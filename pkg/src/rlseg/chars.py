"""Character segmentation inside a word: ROI trim, band OR, cuts and repair.

Touching characters mostly connect in the middle of the x-height, so cuts are
taken where the OR of the top-band and bottom-band occupancies goes dark.
Length statistics then remove negligible fragments (merge) and split oversized
segments at the weakest middle-band column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyWordError, WidthMismatchError
from .projection import (
    Component,
    Occupancy,
    WorkCounter,
    column_frequency,
    components,
    gaps,
    occupancy,
)
from .rle import RleImage, crop_columns
from .words import (
    AUTO,
    SeparatorPoint,
    ThresholdMode,
    WordSegmentation,
    gap_midpoint,
    segment_words,
    separator_at,
)

_EPS = 1e-9  # guards floor() against binary float artifacts like 0.3*10 -> 2.999...96


@dataclass(frozen=True)
class RoiParams:
    """Tuning knobs: ROI trim fraction t, merge factor alpha, split factor beta."""

    t: float = 0.2
    alpha: float = 0.33
    beta: float = 1.75

    def __post_init__(self):
        if not 0 <= self.t < 0.5:
            raise ValueError("t must be in [0, 0.5)")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must be in (0, 1)")
        if not self.beta > 1:
            raise ValueError("beta must be > 1")


DEFAULT_PARAMS = RoiParams()


@dataclass(frozen=True)
class RoiRows:
    """Half-open row span of the region of interest."""

    start: int
    stop: int
    full_box_fallback: bool = False

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class BandSet:
    """Top/middle/bottom row ranges partitioning the ROI exactly."""

    top: range
    middle: range
    bottom: range


@dataclass(frozen=True)
class RepairOp:
    """Audit record: a separator that was removed or inserted at column x."""

    op: str
    x: int

    def __post_init__(self):
        if self.op not in ("removed", "inserted"):
            raise ValueError(f"unknown repair op {self.op!r}")


@dataclass(frozen=True)
class RepairResult:
    chars: tuple[Component, ...]
    cuts: tuple[int, ...]
    repairs: tuple[RepairOp, ...]


@dataclass(frozen=True)
class CharSegmentation:
    """Ordered character intervals, their separators, and the repair trail."""

    chars: tuple[Component, ...]
    separators: tuple[SeparatorPoint, ...]
    repairs: tuple[RepairOp, ...]
    params: RoiParams

    def __post_init__(self):
        object.__setattr__(self, "chars", tuple(self.chars))
        object.__setattr__(self, "separators", tuple(self.separators))
        object.__setattr__(self, "repairs", tuple(self.repairs))
        if not self.chars:
            raise ValueError("a segmentation needs at least one character")
        if len(self.separators) != len(self.chars) - 1:
            raise ValueError("need exactly one separator between consecutive characters")
        for left, right, sep in zip(self.chars, self.chars[1:], self.separators):
            if not left.x_max < sep.x_mid < right.x_min:
                raise ValueError(
                    f"separator {sep.x_mid} not between characters "
                    f"ending {left.x_max} and starting {right.x_min}"
                )


def ink_row_bounds(word: RleImage) -> tuple[int, int]:
    """First and last row indices containing ink (inclusive)."""
    top = next((r for r, row in enumerate(word.rows) if row.has_ink), None)
    if top is None:
        raise EmptyWordError("word image has no ink")
    bot = next(r for r in range(word.height - 1, -1, -1) if word.rows[r].has_ink)
    return top, bot


def roi_from_bounds(ink_top: int, ink_bot: int, t: float) -> RoiRows:
    """Trim floor(t*H) rows off each end of the ink box of height H.

    Trimming never empties the ROI for t < 0.5; larger t values fall back to
    the full ink box and flag it.
    """
    if t < 0 or t >= 1:
        raise ValueError("t must be in [0, 1)")
    height = ink_bot - ink_top + 1
    trim = math.floor(t * height + _EPS)
    if 2 * trim >= height:
        return RoiRows(ink_top, ink_bot + 1, full_box_fallback=True)
    return RoiRows(ink_top + trim, ink_bot + 1 - trim)


def roi(word: RleImage, t: float) -> RoiRows:
    """ROI rows of a word: its ink box minus ascender/descender margins."""
    top, bot = ink_row_bounds(word)
    return roi_from_bounds(top, bot, t)


def split_bands(rows) -> BandSet:
    """Divide a row span (anything with .start/.stop) into three bands.

    Bands are as equal as possible; remainder rows go to the top first.
    A span shorter than 3 rows leaves the trailing bands empty.
    """
    start, stop = rows.start, rows.stop
    n = stop - start
    if n < 1:
        raise ValueError("cannot band an empty row span")
    base, rem = divmod(n, 3)
    top_n = base + (1 if rem >= 1 else 0)
    mid_n = base + (1 if rem >= 2 else 0)
    top = range(start, start + top_n)
    middle = range(top.stop, top.stop + mid_n)
    bottom = range(middle.stop, stop)
    return BandSet(top, middle, bottom)


def band_or(top: Occupancy, bottom: Occupancy) -> Occupancy:
    """Columnwise OR of two band occupancies."""
    if top.width != bottom.width:
        raise WidthMismatchError(f"widths differ: {top.width} vs {bottom.width}")
    return Occupancy(tuple(a or b for a, b in zip(top.bits, bottom.bits)))


def candidate_separators(or_occ: Occupancy) -> list[int]:
    """Floor midpoint of every gap strictly between two occupied stretches."""
    return [gap_midpoint(g) for g in gaps(components(or_occ))]


def _weakest_column(comp: Component, freq, min_piece: int) -> int | None:
    """Leftmost minimum-frequency column that leaves both pieces viable.

    None when no column can keep both pieces at min_piece columns; splitting
    there would just re-create an over-segmented fragment.
    """
    lo, hi = comp.x_min + min_piece, comp.x_max - min_piece
    if lo > hi:
        return None
    return min(range(lo, hi + 1), key=lambda x: (freq[x], x))


def repair(
    chars: list[Component], params: RoiParams = DEFAULT_PARAMS, middle_freq=None
) -> RepairResult:
    """Fix over- and under-segmentation by component length statistics.

    One pass against the pre-repair mean length: components shorter than
    alpha*mean merge into the neighbor across the smaller gap (cascading until
    none remain below the bar); components longer than beta*mean are split once
    at the lowest middle-band frequency column, which the cut consumes.
    """
    comps = list(chars)
    if not comps:
        raise ValueError("repair needs at least one component")
    for a, b in zip(comps, comps[1:]):
        if b.x_min - a.x_max - 1 < 1:
            raise ValueError("components must be sorted and gap-separated")
    cuts = [gap_midpoint(g) for g in gaps(comps)]
    mean = sum(c.length for c in comps) / len(comps)
    low = params.alpha * mean
    high = params.beta * mean
    repairs: list[RepairOp] = []

    while len(comps) > 1:
        idx = next((i for i, c in enumerate(comps) if c.length < low), None)
        if idx is None:
            break
        if idx == 0:
            left = 0
        elif idx == len(comps) - 1:
            left = idx - 1
        else:
            lgap = comps[idx].x_min - comps[idx - 1].x_max - 1
            rgap = comps[idx + 1].x_min - comps[idx].x_max - 1
            left = idx - 1 if lgap <= rgap else idx
        repairs.append(RepairOp("removed", cuts[left]))
        comps[left : left + 2] = [Component(comps[left].x_min, comps[left + 1].x_max)]
        del cuts[left]

    if middle_freq is None and any(c.length > high for c in comps):
        raise ValueError("middle-band frequencies are required to split a component")
    min_piece = max(1, math.ceil(low))
    i = 0
    while i < len(comps):
        comp = comps[i]
        if comp.length > high:
            x = _weakest_column(comp, middle_freq, min_piece)
            if x is not None:
                comps[i : i + 1] = [Component(comp.x_min, x - 1), Component(x + 1, comp.x_max)]
                cuts.insert(i, x)
                repairs.append(RepairOp("inserted", x))
                i += 2
                continue
        i += 1

    return RepairResult(tuple(comps), tuple(cuts), tuple(repairs))


def _band_occupancy(width: int, band: range, occupancy_of) -> Occupancy:
    if len(band) == 0:
        return Occupancy((False,) * width)
    return occupancy_of(band.start, band.stop)


def plan_chars(
    width: int,
    ink_top: int,
    ink_bot: int,
    params: RoiParams,
    occupancy_of,
    frequency_of,
) -> tuple[RoiRows, BandSet, RepairResult]:
    """Projection-agnostic character plan, shared with the pixel baseline.

    occupancy_of/frequency_of take a half-open row span and must cover the
    full image width. Falls back to the full-ROI and then full-ink-box
    occupancy when the top/bottom OR is completely dark (all ink in the
    middle band), so every non-empty word yields at least one character.
    """
    rows = roi_from_bounds(ink_top, ink_bot, params.t)
    bands = split_bands(rows)
    top = _band_occupancy(width, bands.top, occupancy_of)
    bottom = _band_occupancy(width, bands.bottom, occupancy_of)
    merged = band_or(top, bottom)
    comps = components(merged)
    if not comps:
        comps = components(occupancy_of(rows.start, rows.stop))
    if not comps:
        comps = components(occupancy_of(ink_top, ink_bot + 1))
    if len(bands.middle):
        freq = frequency_of(bands.middle.start, bands.middle.stop)
    else:
        freq = [0] * width
    return rows, bands, repair(comps, params, freq)


def segment_chars(
    word: RleImage,
    params: RoiParams = DEFAULT_PARAMS,
    counter: WorkCounter | None = None,
) -> CharSegmentation:
    """Segment one word image into characters, working on runs only."""
    top, bot = ink_row_bounds(word)
    _, _, result = plan_chars(
        word.width,
        top,
        bot,
        params,
        lambda a, b: occupancy(word, (a, b), counter),
        lambda a, b: column_frequency(word, (a, b), counter),
    )
    separators = tuple(separator_at(word, x) for x in result.cuts)
    return CharSegmentation(result.chars, separators, result.repairs, params)


@dataclass(frozen=True)
class LineCharSegmentation:
    """Full word -> character chain for one line, in line coordinates."""

    words: WordSegmentation
    per_word: tuple[CharSegmentation, ...]


def segment_line_chars(
    line: RleImage,
    params: RoiParams = DEFAULT_PARAMS,
    mode: ThresholdMode = AUTO,
    counter: WorkCounter | None = None,
    words: WordSegmentation | None = None,
) -> LineCharSegmentation:
    """Run word segmentation, then character segmentation inside each word.

    Character intervals, cuts and repair records are shifted back into line
    coordinates, and separator run positions are re-located against the full
    line image so the output is self-contained.
    """
    if words is None:
        words = segment_words(line, mode, counter)
    per_word = []
    for comp in words.words:
        sub = crop_columns(line, comp.x_min, comp.x_max)
        local = segment_chars(sub, params, counter)
        per_word.append(_shift_to_line(local, comp.x_min, line))
    return LineCharSegmentation(words, tuple(per_word))


def _shift_to_line(seg: CharSegmentation, dx: int, line: RleImage) -> CharSegmentation:
    chars = tuple(Component(c.x_min + dx, c.x_max + dx) for c in seg.chars)
    separators = tuple(separator_at(line, s.x_mid + dx) for s in seg.separators)
    repairs = tuple(RepairOp(r.op, r.x + dx) for r in seg.repairs)
    return CharSegmentation(chars, separators, repairs, seg.params)
