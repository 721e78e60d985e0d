"""Overlay rendering."""

import numpy as np
import pytest

from rlseg import OutOfBoundsError, encode
from rlseg.render import overlay

from support import bars_bitmap


def test_no_separators_keeps_interior():
    bitmap = bars_bitmap([(2, 5)], width=10, height=4)
    out = overlay(encode(bitmap), [])
    assert out.width == 12 and out.height == 6
    assert np.array_equal(out.pixels[1:-1, 1:-1], bitmap.pixels)
    # border ring is ink
    assert out.pixels[0].all() and out.pixels[-1].all()
    assert out.pixels[:, 0].all() and out.pixels[:, -1].all()


def test_separator_columns_fully_marked():
    bitmap = bars_bitmap([(1, 3), (7, 9)], width=12, height=5)
    out = overlay(encode(bitmap), [5])
    assert out.pixels[:, 6].all()
    # neighbors unchanged
    assert np.array_equal(out.pixels[1:-1, 5], bitmap.pixels[:, 4])


def test_separator_out_of_bounds():
    bitmap = bars_bitmap([(1, 3)], width=6, height=3)
    with pytest.raises(OutOfBoundsError):
        overlay(encode(bitmap), [6])
