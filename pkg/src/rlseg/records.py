"""JSON record construction, shared by the run-domain and pixel-domain paths.

Both pipelines feed the same builders with the same value types, so equal
segmentations serialize to byte-identical JSON.
"""

from __future__ import annotations

import json

from .chars import CharSegmentation, LineCharSegmentation
from .words import SeparatorPoint, WordSegmentation


def separator_record(sep: SeparatorPoint) -> dict:
    return {
        "x": sep.x_mid,
        "runs": [[rc.row, rc.run_index] for rc in sep.per_row],
    }


def word_record(line_id: str, seg: WordSegmentation) -> dict:
    return {
        "line_id": line_id,
        "words": [[c.x_min, c.x_max] for c in seg.words],
        "separators": [separator_record(s) for s in seg.separators],
        "threshold": float(seg.threshold_used),
    }


def char_record(line_id: str, word_id: str, seg: CharSegmentation) -> dict:
    return {
        "line_id": line_id,
        "word_id": word_id,
        "chars": [[c.x_min, c.x_max] for c in seg.chars],
        "separators": [separator_record(s) for s in seg.separators],
        "repairs": [{"op": r.op, "x": r.x} for r in seg.repairs],
        "params": {
            "t": seg.params.t,
            "alpha": seg.params.alpha,
            "beta": seg.params.beta,
        },
    }


def line_char_records(line_id: str, seg: LineCharSegmentation) -> list[dict]:
    return [
        char_record(line_id, f"{line_id}:w{i}", word_seg)
        for i, word_seg in enumerate(seg.per_word)
    ]


def dumps(records) -> str:
    """Canonical serialization used by the CLI and the differential tests."""
    return json.dumps(records, indent=1)
