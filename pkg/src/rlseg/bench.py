"""Wall-clock and work-counter comparison of run-domain vs pixel-domain runs.

Decode time is reported but kept out of the pixel-domain total; charging
decompression to the baseline would only widen the gap.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from pathlib import Path

from .chars import DEFAULT_PARAMS, RoiParams, segment_line_chars
from .pixel_baseline import pdp_segment_line_chars, pdp_segment_words
from .projection import WorkCounter
from .rle import decode, read_rle
from .words import AUTO, ThresholdMode, segment_words

CSV_COLUMNS = [
    "file",
    "width",
    "height",
    "runs",
    "compression_ratio",
    "decode_ms",
    "cdp_word_ms",
    "cdp_char_ms",
    "cdp_total_ms",
    "cdp_var_ms2",
    "pdp_word_ms",
    "pdp_char_ms",
    "pdp_total_ms",
    "pdp_var_ms2",
    "cdp_work",
    "pdp_work",
]


@dataclass
class BenchRow:
    file: str
    width: int
    height: int
    runs: int
    decode_ms: float
    cdp_word_ms: float
    cdp_char_ms: float
    cdp_var_ms2: float
    pdp_word_ms: float
    pdp_char_ms: float
    pdp_var_ms2: float
    cdp_work: int
    pdp_work: int

    @property
    def compression_ratio(self) -> float:
        return self.width * self.height / self.runs

    @property
    def cdp_total_ms(self) -> float:
        return self.cdp_word_ms + self.cdp_char_ms

    @property
    def pdp_total_ms(self) -> float:
        return self.pdp_word_ms + self.pdp_char_ms


def _time_pipeline(segment_words_fn, segment_chars_fn) -> tuple[float, float]:
    t0 = time.perf_counter()
    words = segment_words_fn()
    t1 = time.perf_counter()
    segment_chars_fn(words)
    t2 = time.perf_counter()
    return (t1 - t0) * 1e3, (t2 - t1) * 1e3


def bench_file(
    path,
    params: RoiParams = DEFAULT_PARAMS,
    mode: ThresholdMode = AUTO,
    repeat: int = 1,
) -> BenchRow:
    """Time both pipelines on one line file, repeat times each."""
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    path = Path(path)
    line = read_rle(path)
    t0 = time.perf_counter()
    bitmap = decode(line)
    decode_ms = (time.perf_counter() - t0) * 1e3

    cdp_times, pdp_times = [], []
    for _ in range(repeat):
        cdp_times.append(
            _time_pipeline(
                lambda: segment_words(line, mode),
                lambda w: segment_line_chars(line, params, mode, words=w),
            )
        )
        pdp_times.append(
            _time_pipeline(
                lambda: pdp_segment_words(bitmap, mode),
                lambda w: pdp_segment_line_chars(bitmap, params, mode, words=w),
            )
        )

    cdp_counter, pdp_counter = WorkCounter(), WorkCounter()
    segment_line_chars(line, params, mode, counter=cdp_counter)
    pdp_segment_line_chars(bitmap, params, mode, counter=pdp_counter)

    cdp_word = statistics.fmean(t[0] for t in cdp_times)
    cdp_char = statistics.fmean(t[1] for t in cdp_times)
    pdp_word = statistics.fmean(t[0] for t in pdp_times)
    pdp_char = statistics.fmean(t[1] for t in pdp_times)
    return BenchRow(
        file=path.name,
        width=line.width,
        height=line.height,
        runs=line.total_runs,
        decode_ms=decode_ms,
        cdp_word_ms=cdp_word,
        cdp_char_ms=cdp_char,
        cdp_var_ms2=statistics.pvariance([sum(t) for t in cdp_times]),
        pdp_word_ms=pdp_word,
        pdp_char_ms=pdp_char,
        pdp_var_ms2=statistics.pvariance([sum(t) for t in pdp_times]),
        cdp_work=cdp_counter.count,
        pdp_work=pdp_counter.count,
    )


def bench_paths(paths, params=DEFAULT_PARAMS, mode=AUTO, repeat=1) -> list[BenchRow]:
    return [bench_file(p, params, mode, repeat) for p in paths]


def totals(rows: list[BenchRow]) -> dict:
    """Aggregate row for the CSV; ratio is corpus pixels per corpus run."""
    pixels = sum(r.width * r.height for r in rows)
    runs = sum(r.runs for r in rows)
    return {
        "file": "TOTAL",
        "width": "",
        "height": "",
        "runs": runs,
        "compression_ratio": f"{pixels / runs:.3f}" if runs else "",
        "decode_ms": f"{sum(r.decode_ms for r in rows):.3f}",
        "cdp_word_ms": f"{sum(r.cdp_word_ms for r in rows):.3f}",
        "cdp_char_ms": f"{sum(r.cdp_char_ms for r in rows):.3f}",
        "cdp_total_ms": f"{sum(r.cdp_total_ms for r in rows):.3f}",
        "cdp_var_ms2": "",
        "pdp_word_ms": f"{sum(r.pdp_word_ms for r in rows):.3f}",
        "pdp_char_ms": f"{sum(r.pdp_char_ms for r in rows):.3f}",
        "pdp_total_ms": f"{sum(r.pdp_total_ms for r in rows):.3f}",
        "pdp_var_ms2": "",
        "cdp_work": sum(r.cdp_work for r in rows),
        "pdp_work": sum(r.pdp_work for r in rows),
    }


def write_csv(rows: list[BenchRow], stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                "file": row.file,
                "width": row.width,
                "height": row.height,
                "runs": row.runs,
                "compression_ratio": f"{row.compression_ratio:.3f}",
                "decode_ms": f"{row.decode_ms:.3f}",
                "cdp_word_ms": f"{row.cdp_word_ms:.3f}",
                "cdp_char_ms": f"{row.cdp_char_ms:.3f}",
                "cdp_total_ms": f"{row.cdp_total_ms:.3f}",
                "cdp_var_ms2": f"{row.cdp_var_ms2:.6f}",
                "pdp_word_ms": f"{row.pdp_word_ms:.3f}",
                "pdp_char_ms": f"{row.pdp_char_ms:.3f}",
                "pdp_total_ms": f"{row.pdp_total_ms:.3f}",
                "pdp_var_ms2": f"{row.pdp_var_ms2:.6f}",
                "cdp_work": row.cdp_work,
                "pdp_work": row.pdp_work,
            }
        )
    if rows:
        writer.writerow(totals(rows))
