"""One-to-one interval matching and the accuracy-rate score."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyGroundTruthError

_SLACK = 1e-9  # keeps exact-boundary overlaps from failing on float rounding


@dataclass(frozen=True)
class MatchResult:
    """Partial bijection between predicted and ground-truth intervals."""

    pairs: tuple[tuple[int, int], ...]
    unmatched_pred: int
    unmatched_truth: int


@dataclass(frozen=True)
class AccuracyReport:
    """Accuracy rate: percentage of truth entities with a one-to-one match."""

    total_truth: int
    one_to_one: int

    def __post_init__(self):
        if self.total_truth < 1:
            raise EmptyGroundTruthError("accuracy rate needs a non-empty ground truth")
        if not 0 <= self.one_to_one <= self.total_truth:
            raise ValueError("matched count out of range")

    @property
    def ar_percent(self) -> float:
        return 100.0 * self.one_to_one / self.total_truth


@dataclass(frozen=True)
class GroundTruthLine:
    """Reference word intervals (and optionally per-word character intervals)."""

    line_id: str
    words: tuple[tuple[int, int], ...]
    chars: tuple[tuple[tuple[int, int], ...], ...] | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "GroundTruthLine":
        words = tuple((int(a), int(b)) for a, b in obj["words"])
        chars = None
        if obj.get("chars") is not None:
            chars = tuple(
                tuple((int(a), int(b)) for a, b in word) for word in obj["chars"]
            )
        return cls(str(obj["line_id"]), words, chars)


def load_ground_truth(path) -> list[GroundTruthLine]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [GroundTruthLine.from_json(obj) for obj in data]


def _check_sorted_disjoint(name: str, intervals) -> None:
    prev_end = None
    for a, b in intervals:
        if a > b:
            raise ValueError(f"{name} interval [{a}, {b}] is inverted")
        if prev_end is not None and a <= prev_end:
            raise ValueError(f"{name} intervals overlap or are unsorted at [{a}, {b}]")
        prev_end = b


def match(pred, truth, overlap_min: float = 0.9) -> MatchResult:
    """Greedy left-to-right pairing of sorted, disjoint inclusive intervals.

    A pair qualifies when the intersection covers at least overlap_min of the
    longer interval; each side is used at most once. With disjoint sorted
    intervals qualifying pairs cannot cross, so greedy pairing is optimal.
    """
    if not 0 < overlap_min <= 1:
        raise ValueError("overlap_min must be in (0, 1]")
    _check_sorted_disjoint("predicted", pred)
    _check_sorted_disjoint("truth", truth)
    pairs = []
    i = j = 0
    while i < len(pred) and j < len(truth):
        a, b = pred[i]
        c, d = truth[j]
        inter = min(b, d) - max(a, c) + 1
        longer = max(b - a + 1, d - c + 1)
        if inter + _SLACK >= overlap_min * longer:
            pairs.append((i, j))
            i += 1
            j += 1
        elif b < d:
            i += 1
        elif d < b:
            j += 1
        else:
            i += 1
            j += 1
    return MatchResult(tuple(pairs), len(pred) - len(pairs), len(truth) - len(pairs))


def accuracy_rate(result: MatchResult, total_truth: int) -> AccuracyReport:
    """Apply the one-to-one accuracy formula; raises on empty ground truth."""
    return AccuracyReport(total_truth, len(result.pairs))


def evaluate_records(
    pred_records, truth_lines, mode: str = "word", overlap_min: float = 0.9
) -> dict:
    """Score segmentation output records against ground truth, per line.

    Word mode consumes word records; char mode consumes per-word character
    records and flattens both sides to one interval list per line, so word
    segmentation errors cascade into the character score.
    """
    if mode not in ("word", "char"):
        raise ValueError(f"unknown evaluation mode {mode!r}")
    per_line: dict[str, list[tuple[int, int]]] = {}
    for rec in pred_records:
        key = "words" if mode == "word" else "chars"
        if key not in rec:
            continue
        ivs = [(int(a), int(b)) for a, b in rec[key]]
        per_line.setdefault(str(rec["line_id"]), []).extend(ivs)

    total = matched = 0
    lines = []
    for truth in truth_lines:
        if mode == "word":
            truth_ivs = list(truth.words)
        else:
            if truth.chars is None:
                raise ValueError(f"ground truth line {truth.line_id} has no chars")
            truth_ivs = [iv for word in truth.chars for iv in word]
        pred_ivs = per_line.get(truth.line_id, [])
        result = match(pred_ivs, truth_ivs, overlap_min)
        n_truth, n_matched = len(truth_ivs), len(result.pairs)
        total += n_truth
        matched += n_matched
        lines.append(
            {
                "line_id": truth.line_id,
                "total": n_truth,
                "matched": n_matched,
                "ar": 100.0 * n_matched / n_truth if n_truth else None,
            }
        )
    report = AccuracyReport(total, matched)
    return {
        "mode": mode,
        "total": report.total_truth,
        "matched": report.one_to_one,
        "ar": report.ar_percent,
        "lines": lines,
    }
