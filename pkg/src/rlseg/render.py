"""Overlay rendering: the decoded line with separator columns painted."""

from __future__ import annotations

import numpy as np

from .errors import OutOfBoundsError
from .rle import Bitmap, RleImage, decode


def overlay(rle: RleImage, separator_xs) -> Bitmap:
    """Frame the decoded image and mark each separator as a full ink column."""
    src = decode(rle).pixels
    h, w = src.shape
    out = np.ones((h + 2, w + 2), dtype=np.uint8)
    out[1:-1, 1:-1] = src
    for x in separator_xs:
        if not 0 <= x < w:
            raise OutOfBoundsError(f"separator column {x} outside image of width {w}")
        out[:, x + 1] = 1
    return Bitmap(out)
