"""Word segmentation: gap statistics over components, cut placement in runs.

The policy half (threshold selection, gap classification, component merging)
is pure interval arithmetic and is shared with the pixel-domain baseline;
only the projection/locate layers differ between the two paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyLineError, NoGapsError
from .projection import Component, Gap, WorkCounter, components, gaps, occupancy
from .rle import RleImage, RunCoordinate, locate_run


class GapKind(Enum):
    INTER_WORD = "inter"
    INTRA_WORD = "intra"


@dataclass(frozen=True)
class ThresholdMode:
    """Gap threshold policy: 'auto' (mean), 'scale' (factor x mean) or 'fixed'."""

    kind: str
    value: float = 1.0

    def __post_init__(self):
        if self.kind not in ("auto", "fixed", "scale"):
            raise ValueError(f"unknown threshold mode {self.kind!r}")
        object.__setattr__(self, "value", float(self.value))
        if self.kind == "fixed" and self.value < 0:
            raise ValueError("fixed threshold must be >= 0")
        if self.kind == "scale" and self.value <= 0:
            raise ValueError("scale factor must be > 0")

    @classmethod
    def parse(cls, spec: str) -> "ThresholdMode":
        """Parse 'auto', 'fixed:<value>' or 'scale:<factor>'."""
        if spec == "auto":
            return AUTO
        kind, sep, value = spec.partition(":")
        if sep and kind in ("fixed", "scale"):
            return cls(kind, float(value))
        raise ValueError(f"bad threshold spec {spec!r}")


AUTO = ThresholdMode("auto")


@dataclass(frozen=True)
class SeparatorPoint:
    """A cut column plus its run coordinate in every row of the source image."""

    x_mid: int
    per_row: tuple[RunCoordinate, ...]

    def __post_init__(self):
        object.__setattr__(self, "per_row", tuple(self.per_row))
        if any(rc.x != self.x_mid for rc in self.per_row):
            raise ValueError("per-row coordinates must reference x_mid")


@dataclass(frozen=True)
class WordSegmentation:
    """Ordered word intervals with the separators that divide them."""

    words: tuple[Component, ...]
    separators: tuple[SeparatorPoint, ...]
    threshold_used: float

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        object.__setattr__(self, "separators", tuple(self.separators))
        object.__setattr__(self, "threshold_used", float(self.threshold_used))
        if not self.words:
            raise ValueError("a segmentation needs at least one word")
        if len(self.separators) != len(self.words) - 1:
            raise ValueError("need exactly one separator between consecutive words")
        for left, right, sep in zip(self.words, self.words[1:], self.separators):
            if not left.x_max < sep.x_mid < right.x_min:
                raise ValueError(
                    f"separator {sep.x_mid} not strictly inside gap "
                    f"({left.x_max}, {right.x_min})"
                )


def select_threshold(gap_list: list[Gap], mode: ThresholdMode = AUTO) -> float:
    """Pick the inter/intra gap threshold for one line."""
    if mode.kind == "fixed":
        return mode.value
    widths = [g.width for g in gap_list]
    if not widths:
        raise NoGapsError("cannot average gaps of a single-component line")
    mean = sum(widths) / len(widths)
    return mean * mode.value if mode.kind == "scale" else mean


def classify_gaps(gap_list: list[Gap], threshold: float) -> list[GapKind]:
    """Strictly-greater-than-threshold gaps separate words."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    return [
        GapKind.INTER_WORD if g.width > threshold else GapKind.INTRA_WORD
        for g in gap_list
    ]


def gap_midpoint(gap: Gap) -> int:
    """Floor midpoint of the gap; always strictly between the bounding ink."""
    return (gap.left + gap.right) // 2


def plan_words(
    comps: list[Component], mode: ThresholdMode = AUTO
) -> tuple[list[Component], list[int], float]:
    """Merge components across intra-word gaps.

    Returns the word intervals, the cut column per inter-word gap, and the
    threshold that was applied. A line without gaps is a single word and
    reports threshold 0.0 unless a fixed threshold was requested.
    """
    if not comps:
        raise EmptyLineError("no components to segment")
    gap_list = gaps(comps)
    if not gap_list:
        return [comps[0]], [], mode.value if mode.kind == "fixed" else 0.0
    threshold = select_threshold(gap_list, mode)
    labels = classify_gaps(gap_list, threshold)
    words: list[Component] = []
    cuts: list[int] = []
    start = comps[0].x_min
    end = comps[0].x_max
    for comp, gap, label in zip(comps[1:], gap_list, labels):
        if label is GapKind.INTER_WORD:
            words.append(Component(start, end))
            cuts.append(gap_midpoint(gap))
            start = comp.x_min
        end = comp.x_max
    words.append(Component(start, end))
    return words, cuts, threshold


def separator_at(image: RleImage, x: int) -> SeparatorPoint:
    """Locate column x in every row's runs (the coordinate-position output)."""
    per_row = tuple(
        RunCoordinate(r, locate_run(image.rows[r], x), x) for r in range(image.height)
    )
    return SeparatorPoint(x, per_row)


def segment_words(
    line: RleImage, mode: ThresholdMode = AUTO, counter: WorkCounter | None = None
) -> WordSegmentation:
    """Segment one text line into words, working on runs only."""
    occ = occupancy(line, (0, line.height), counter)
    comps = components(occ)
    if not comps:
        raise EmptyLineError("line has no foreground runs")
    word_list, cuts, threshold = plan_words(comps, mode)
    separators = tuple(separator_at(line, x) for x in cuts)
    return WordSegmentation(tuple(word_list), separators, threshold)
