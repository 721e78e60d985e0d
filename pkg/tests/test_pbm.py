"""PBM ingestion and emission."""

import random

import pytest

from rlseg import Bitmap, ParseError, encode, read_pbm, write_pbm, write_rle

from support import random_bitmap


def test_p1_roundtrip(tmp_path):
    rng = random.Random(3)
    for i in range(20):
        bitmap = random_bitmap(rng)
        path = tmp_path / f"img{i}.pbm"
        write_pbm(bitmap, path)
        assert read_pbm(path) == bitmap


def test_p4_roundtrip(tmp_path):
    rng = random.Random(4)
    for i in range(20):
        bitmap = random_bitmap(rng)
        path = tmp_path / f"img{i}.pbm"
        write_pbm(bitmap, path, binary=True)
        assert read_pbm(path) == bitmap


def test_p1_and_p4_give_identical_rle(tmp_path):
    rng = random.Random(5)
    bitmap = random_bitmap(rng, max_w=40, max_h=12)
    write_pbm(bitmap, tmp_path / "a.pbm")
    write_pbm(bitmap, tmp_path / "b.pbm", binary=True)
    write_rle(encode(read_pbm(tmp_path / "a.pbm")), tmp_path / "a.rle")
    write_rle(encode(read_pbm(tmp_path / "b.pbm")), tmp_path / "b.rle")
    assert (tmp_path / "a.rle").read_bytes() == (tmp_path / "b.rle").read_bytes()


def test_p1_comments_and_packed_digits(tmp_path):
    path = tmp_path / "c.pbm"
    path.write_text("P1\n# a comment\n4 2 # trailing\n1101\n# mid raster\n0 0 1 1\n")
    assert read_pbm(path) == Bitmap([[1, 1, 0, 1], [0, 0, 1, 1]])


def test_p4_truncated_payload(tmp_path):
    path = tmp_path / "t.pbm"
    bitmap = Bitmap([[1] * 20] * 4)
    write_pbm(bitmap, path, binary=True)
    data = path.read_bytes()
    path.write_bytes(data[:-3])
    with pytest.raises(ParseError):
        read_pbm(path)


def test_p1_truncated_raster(tmp_path):
    path = tmp_path / "t.pbm"
    path.write_text("P1\n4 2\n1101\n")
    with pytest.raises(ParseError):
        read_pbm(path)


def test_bad_magic(tmp_path):
    path = tmp_path / "x.pbm"
    path.write_text("P5\n4 2\n")
    with pytest.raises(ParseError):
        read_pbm(path)


def test_p1_line_length_limit(tmp_path):
    path = tmp_path / "wide.pbm"
    write_pbm(Bitmap([[1] * 300]), path)
    assert all(len(line) <= 70 for line in path.read_text().splitlines())
