"""Run-length data model, codec and run-coordinate arithmetic.

A row is stored as alternating run lengths, background first. Rows that start
with ink carry an explicit leading 0, so run parity alone determines color:
even indices are background, odd indices are foreground. Columns are 0-based
and run membership is half-open: column x belongs to run j when
cumulative(j) - runs[j] <= x < cumulative(j).
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate
from pathlib import Path

import numpy as np

from .errors import MalformedRleError, OutOfBoundsError, ParseError


class Bitmap:
    """Binary image; pixel value 1 is foreground ink, 0 is background."""

    __slots__ = ("pixels",)

    def __init__(self, pixels) -> None:
        arr = np.array(pixels, dtype=np.uint8, copy=True)
        if arr.ndim != 2:
            raise ValueError("pixels must form a 2-D array")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if arr.max(initial=0) > 1:
            raise ValueError("pixel values must be 0 or 1")
        arr.setflags(write=False)
        self.pixels = arr

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @classmethod
    def zeros(cls, width: int, height: int) -> "Bitmap":
        return cls(np.zeros((height, width), dtype=np.uint8))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bitmap):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    def __repr__(self) -> str:
        return f"Bitmap({self.width}x{self.height})"


@dataclass(frozen=True)
class RleRow:
    """One row of alternating run lengths, background first."""

    runs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "runs", tuple(int(n) for n in self.runs))
        if not self.runs:
            raise MalformedRleError("a row needs at least one run")
        if any(n < 0 for n in self.runs):
            raise MalformedRleError("run lengths cannot be negative")
        if any(n == 0 for n in self.runs[1:]):
            raise MalformedRleError("only the leading background run may be 0")

    @property
    def width(self) -> int:
        return sum(self.runs)

    @property
    def has_ink(self) -> bool:
        return len(self.runs) >= 2


@dataclass(frozen=True)
class RleImage:
    """Run-length compressed binary image: one RleRow per pixel row."""

    width: int
    rows: tuple[RleRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.width < 1:
            raise MalformedRleError("width must be >= 1")
        if not self.rows:
            raise MalformedRleError("image needs at least one row")
        for i, row in enumerate(self.rows):
            if row.width != self.width:
                raise MalformedRleError(
                    f"row {i}: runs sum to {row.width}, expected width {self.width}"
                )

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def total_runs(self) -> int:
        return sum(len(row.runs) for row in self.rows)


@dataclass(frozen=True)
class RunCoordinate:
    """A column position expressed against one row's run list."""

    row: int
    run_index: int
    x: int


def encode(bitmap: Bitmap) -> RleImage:
    """Compress a bitmap row by row into background-first run lengths."""
    rows = []
    width = bitmap.width
    for r in range(bitmap.height):
        px = bitmap.pixels[r]
        change = np.flatnonzero(px[1:] != px[:-1]) + 1
        bounds = np.concatenate(([0], change, [width]))
        lengths = np.diff(bounds).tolist()
        if px[0]:
            lengths.insert(0, 0)
        rows.append(RleRow(tuple(lengths)))
    return RleImage(width, tuple(rows))


def decode(rle: RleImage) -> Bitmap:
    """Expand runs back to pixels; exact inverse of encode."""
    out = np.zeros((rle.height, rle.width), dtype=np.uint8)
    for r, row in enumerate(rle.rows):
        x = 0
        for j, run in enumerate(row.runs):
            if j & 1:
                out[r, x : x + run] = 1
            x += run
    return Bitmap(out)


def cumulative_runs(row: RleRow) -> tuple[int, ...]:
    """Prefix sums of the run lengths; the last entry equals the row width."""
    return tuple(accumulate(row.runs))


def locate_run(row: RleRow, x: int) -> int:
    """Index of the run containing column x.

    Uses the half-open convention: run j covers cumulative(j) - runs[j] <= x
    < cumulative(j), so boundary columns always resolve to exactly one run.
    """
    cr = cumulative_runs(row)
    if x < 0 or x >= cr[-1]:
        raise OutOfBoundsError(f"column {x} outside row of width {cr[-1]}")
    return bisect_right(cr, x)


def crop_columns(rle: RleImage, x_min: int, x_max: int) -> RleImage:
    """Extract an inclusive column range as a standalone image."""
    if not 0 <= x_min <= x_max < rle.width:
        raise OutOfBoundsError(
            f"columns [{x_min}, {x_max}] outside image of width {rle.width}"
        )
    width = x_max - x_min + 1
    rows = []
    for row in rle.rows:
        pieces = []
        pos = 0
        for j, run in enumerate(row.runs):
            if j & 1 and run:
                a = max(pos, x_min)
                b = min(pos + run - 1, x_max)
                if a <= b:
                    pieces.append((a - x_min, b - x_min))
            pos += run
        rows.append(row_from_intervals(width, pieces))
    return RleImage(width, tuple(rows))


def row_from_intervals(width: int, intervals) -> RleRow:
    """Build a row from sorted, disjoint inclusive foreground intervals."""
    runs = []
    pos = 0
    for a, b in intervals:
        runs.append(a - pos)
        runs.append(b - a + 1)
        pos = b + 1
    if pos < width:
        runs.append(width - pos)
    return RleRow(tuple(runs))


_HEADER_RE = re.compile(r"^RLE1 ([0-9]+) ([0-9]+)$")


def write_rle(rle: RleImage, path) -> None:
    """Write the text .rle format: header line, then one run list per row."""
    lines = [f"RLE1 {rle.width} {rle.height}"]
    lines.extend(" ".join(str(n) for n in row.runs) for row in rle.rows)
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_rle(path) -> RleImage:
    """Parse the text .rle format; strict about whitespace and the header."""
    path = Path(path)
    try:
        # bytes + explicit decode: universal-newline translation would hide CRLF
        text = path.read_bytes().decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(path, 0, f"not ASCII: {exc}") from exc
    if not text:
        raise ParseError(path, 0, "empty file")
    if not text.endswith("\n"):
        raise ParseError(path, text.count("\n") + 1, "missing trailing newline")
    lines = text.split("\n")[:-1]
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise ParseError(path, 1, f"bad header {lines[0]!r}, expected 'RLE1 <width> <height>'")
    width, height = int(header.group(1)), int(header.group(2))
    if width < 1 or height < 1:
        raise ParseError(path, 1, f"width and height must be >= 1, got {width}x{height}")
    if len(lines) - 1 != height:
        raise ParseError(
            path, len(lines), f"expected {height} row lines, found {len(lines) - 1}"
        )
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if any(not tok or not tok.isascii() or not tok.isdigit() for tok in tokens):
            raise ParseError(path, lineno, f"malformed run list {line!r}")
        try:
            row = RleRow(tuple(int(tok) for tok in tokens))
        except MalformedRleError as exc:
            raise ParseError(path, lineno, str(exc)) from exc
        if row.width != width:
            raise ParseError(
                path, lineno, f"runs sum to {row.width}, header width is {width}"
            )
        rows.append(row)
    return RleImage(width, tuple(rows))
