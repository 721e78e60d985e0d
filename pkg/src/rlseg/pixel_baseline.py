"""Pixel-domain twin of the run-domain pipeline.

Serves two purposes: a correctness oracle (both paths must produce identical
segmentations on decode-equal inputs) and the timing baseline. Projection and
coordinate location here deliberately touch every pixel in plain Python, so
wall-clock comparisons measure the algorithms rather than vectorization.
All policy code (thresholds, merging, bands, repair) is shared with the
run-domain modules; only the projection layer differs.
"""

from __future__ import annotations

from .chars import (
    CharSegmentation,
    DEFAULT_PARAMS,
    LineCharSegmentation,
    RepairOp,
    RoiParams,
    plan_chars,
)
from .errors import EmptyLineError, EmptyWordError, OutOfBoundsError
from .projection import Component, Occupancy, WorkCounter, _check_row_range, components
from .rle import Bitmap, RunCoordinate
from .words import (
    AUTO,
    SeparatorPoint,
    ThresholdMode,
    WordSegmentation,
    plan_words,
)


def pdp_occupancy(
    bitmap: Bitmap, row_range, counter: WorkCounter | None = None
) -> Occupancy:
    """Columnwise OR over rows [start, stop), scanning every pixel."""
    start, stop = _check_row_range(bitmap.height, row_range)
    width = bitmap.width
    bits = [False] * width
    for r in range(start, stop):
        if counter is not None:
            counter.add(width)
        row = bitmap.pixels[r]
        for x in range(width):
            if row[x]:
                bits[x] = True
    return Occupancy(tuple(bits))


def pdp_column_frequency(
    bitmap: Bitmap, row_range, counter: WorkCounter | None = None
) -> list[int]:
    """Per-column ink counts over rows [start, stop), scanning every pixel."""
    start, stop = _check_row_range(bitmap.height, row_range)
    width = bitmap.width
    freq = [0] * width
    for r in range(start, stop):
        if counter is not None:
            counter.add(width)
        row = bitmap.pixels[r]
        for x in range(width):
            if row[x]:
                freq[x] += 1
    return freq


def pdp_ink_row_bounds(bitmap: Bitmap) -> tuple[int, int]:
    """First and last inked rows, found by scanning pixels."""
    top = bot = None
    for r in range(bitmap.height):
        row = bitmap.pixels[r]
        if any(row[x] for x in range(bitmap.width)):
            top = r
            break
    if top is None:
        raise EmptyWordError("word image has no ink")
    for r in range(bitmap.height - 1, -1, -1):
        row = bitmap.pixels[r]
        if any(row[x] for x in range(bitmap.width)):
            bot = r
            break
    return top, bot


def pdp_locate_run(row_pixels, x: int) -> int:
    """Run index of column x, recovered by counting color transitions."""
    width = len(row_pixels)
    if x < 0 or x >= width:
        raise OutOfBoundsError(f"column {x} outside row of width {width}")
    index = 1 if row_pixels[0] else 0
    prev = row_pixels[0]
    for i in range(1, x + 1):
        cur = row_pixels[i]
        if cur != prev:
            index += 1
        prev = cur
    return index


def pdp_separator_at(bitmap: Bitmap, x: int) -> SeparatorPoint:
    per_row = tuple(
        RunCoordinate(r, pdp_locate_run(bitmap.pixels[r], x), x)
        for r in range(bitmap.height)
    )
    return SeparatorPoint(x, per_row)


def pdp_segment_words(
    bitmap: Bitmap, mode: ThresholdMode = AUTO, counter: WorkCounter | None = None
) -> WordSegmentation:
    """Word segmentation over pixels; same policy, pixel projection."""
    occ = pdp_occupancy(bitmap, (0, bitmap.height), counter)
    comps = components(occ)
    if not comps:
        raise EmptyLineError("line has no foreground pixels")
    word_list, cuts, threshold = plan_words(comps, mode)
    separators = tuple(pdp_separator_at(bitmap, x) for x in cuts)
    return WordSegmentation(tuple(word_list), separators, threshold)


def pdp_segment_chars(
    word: Bitmap,
    params: RoiParams = DEFAULT_PARAMS,
    counter: WorkCounter | None = None,
) -> CharSegmentation:
    """Character segmentation over pixels; same plan, pixel projection."""
    top, bot = pdp_ink_row_bounds(word)
    _, _, result = plan_chars(
        word.width,
        top,
        bot,
        params,
        lambda a, b: pdp_occupancy(word, (a, b), counter),
        lambda a, b: pdp_column_frequency(word, (a, b), counter),
    )
    separators = tuple(pdp_separator_at(word, x) for x in result.cuts)
    return CharSegmentation(result.chars, separators, result.repairs, params)


def pdp_segment_line_chars(
    bitmap: Bitmap,
    params: RoiParams = DEFAULT_PARAMS,
    mode: ThresholdMode = AUTO,
    counter: WorkCounter | None = None,
    words: WordSegmentation | None = None,
) -> LineCharSegmentation:
    """Pixel-domain word -> character chain, mirroring segment_line_chars."""
    if words is None:
        words = pdp_segment_words(bitmap, mode, counter)
    per_word = []
    for comp in words.words:
        sub = Bitmap(bitmap.pixels[:, comp.x_min : comp.x_max + 1])
        local = pdp_segment_chars(sub, params, counter)
        chars = tuple(
            Component(c.x_min + comp.x_min, c.x_max + comp.x_min) for c in local.chars
        )
        separators = tuple(
            pdp_separator_at(bitmap, s.x_mid + comp.x_min) for s in local.separators
        )
        repairs = tuple(RepairOp(r.op, r.x + comp.x_min) for r in local.repairs)
        per_word.append(CharSegmentation(chars, separators, repairs, local.params))
    return LineCharSegmentation(words, tuple(per_word))
