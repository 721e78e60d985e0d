"""PBM reading and writing (P1 ASCII and P4 packed); PBM 1 = black = ink."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ParseError
from .rle import Bitmap

_WHITESPACE = b" \t\r\n"


def _line_of(data: bytes, pos: int) -> int:
    return data.count(b"\n", 0, pos) + 1


def _next_token(data: bytes, pos: int, path) -> tuple[int, int]:
    """Read one decimal header token, skipping whitespace and # comments."""
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c in _WHITESPACE:
            pos += 1
        elif c == b"#":
            while pos < n and data[pos : pos + 1] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos : pos + 1].isdigit():
        pos += 1
    if start == pos:
        raise ParseError(path, _line_of(data, start), "expected a decimal header token")
    return int(data[start:pos]), pos


def read_pbm(path) -> Bitmap:
    """Load a PBM file; accepts both the P1 and the P4 encoding."""
    path = Path(path)
    data = path.read_bytes()
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise ParseError(path, 1, f"not a PBM file (magic {magic!r}, expected P1 or P4)")
    width, pos = _next_token(data, 2, path)
    height, pos = _next_token(data, pos, path)
    if width < 1 or height < 1:
        raise ParseError(path, 1, f"width and height must be >= 1, got {width}x{height}")
    if magic == b"P1":
        return _read_p1_raster(data, pos, width, height, path)
    return _read_p4_raster(data, pos, width, height, path)


def _read_p1_raster(data: bytes, pos: int, width: int, height: int, path) -> Bitmap:
    target = width * height
    vals = bytearray(target)
    n = 0
    size = len(data)
    while pos < size and n < target:
        c = data[pos]
        if c in (0x30, 0x31):  # '0' / '1'
            vals[n] = c - 0x30
            n += 1
            pos += 1
        elif data[pos : pos + 1] in _WHITESPACE:
            pos += 1
        elif c == 0x23:  # '#'
            while pos < size and data[pos : pos + 1] not in b"\r\n":
                pos += 1
        else:
            raise ParseError(
                path, _line_of(data, pos), f"unexpected byte {chr(c)!r} in P1 raster"
            )
    if n < target:
        raise ParseError(
            path, _line_of(data, pos), f"truncated P1 raster: {n} of {target} pixels"
        )
    arr = np.frombuffer(bytes(vals), dtype=np.uint8).reshape(height, width)
    return Bitmap(arr)


def _read_p4_raster(data: bytes, pos: int, width: int, height: int, path) -> Bitmap:
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise ParseError(path, _line_of(data, pos), "expected whitespace after P4 header")
    pos += 1  # exactly one whitespace byte separates header and raster
    row_bytes = (width + 7) // 8
    need = row_bytes * height
    payload = data[pos : pos + need]
    if len(payload) < need:
        raise ParseError(
            path,
            _line_of(data, pos),
            f"truncated P4 raster: need {need} bytes, found {len(payload)}",
        )
    packed = np.frombuffer(payload, dtype=np.uint8).reshape(height, row_bytes)
    bits = np.unpackbits(packed, axis=1)[:, :width]
    return Bitmap(bits)


def write_pbm(bitmap: Bitmap, path, binary: bool = False) -> None:
    """Write a bitmap as P4 when binary is set, else as line-wrapped P1."""
    path = Path(path)
    if binary:
        packed = np.packbits(bitmap.pixels, axis=1)
        path.write_bytes(f"P4\n{bitmap.width} {bitmap.height}\n".encode() + packed.tobytes())
        return
    out = [f"P1\n{bitmap.width} {bitmap.height}"]
    for r in range(bitmap.height):
        digits = "".join("1" if v else "0" for v in bitmap.pixels[r])
        # keep lines below the classic 70-character PBM limit
        out.extend(digits[i : i + 64] for i in range(0, len(digits), 64))
    path.write_text("\n".join(out) + "\n", encoding="ascii")
