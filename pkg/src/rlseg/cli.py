"""Command-line surface: codec, segmentation, evaluation, bench, synth, render."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as benchmod
from .chars import RoiParams, segment_line_chars
from .errors import (
    EmptyGroundTruthError,
    EmptyLineError,
    EmptyWordError,
    MalformedRleError,
    ParseError,
)
from .evaluate import evaluate_records, load_ground_truth
from .pbm import read_pbm, write_pbm
from .records import dumps, line_char_records, word_record
from .render import overlay
from .rle import decode, encode, read_rle, write_rle
from .synth import SynthConfig, write_corpus
from .words import ThresholdMode, segment_words

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_EVAL = 3
EXIT_PARSE = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_config(path) -> dict[str, str]:
    """Parse a simple key=value config file; '#' starts a comment."""
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(path, lineno, f"expected key=value, got {raw!r}")
        cfg[key.strip()] = value.strip()
    return cfg


def _setting(args, cfg: dict, key: str, cast, default):
    """Flag value if given, else config-file value, else the default."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in cfg:
        return cast(cfg[key])
    return default


def _resolve_params(args, cfg) -> RoiParams:
    return RoiParams(
        t=_setting(args, cfg, "roi_t", float, 0.2),
        alpha=_setting(args, cfg, "alpha", float, 0.33),
        beta=_setting(args, cfg, "beta", float, 1.75),
    )


def _resolve_mode(args, cfg) -> ThresholdMode:
    return _setting(args, cfg, "threshold", ThresholdMode.parse, ThresholdMode.parse("auto"))


def _input_lines(path: Path) -> list[tuple[str, Path]]:
    """A single .rle file, a directory of them, or a manifest of paths."""
    if path.is_dir():
        files = sorted(path.glob("*.rle"))
        if not files:
            raise ParseError(path, 0, "directory contains no .rle files")
        return [(p.stem, p) for p in files]
    if path.suffix == ".rle":
        return [(path.stem, path)]
    entries = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        name = raw.strip()
        if name:
            target = (path.parent / name).resolve()
            entries.append((target.stem, target))
    if not entries:
        raise ParseError(path, 0, "manifest lists no files")
    return entries


def _emit(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_encode(args) -> int:
    write_rle(encode(read_pbm(args.pbm)), args.rle)
    return EXIT_OK


def cmd_decode(args) -> int:
    write_pbm(decode(read_rle(args.rle)), args.pbm, binary=args.binary)
    return EXIT_OK


def cmd_segment(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    mode = _resolve_mode(args, cfg)
    params = _resolve_params(args, cfg)
    records = []
    for line_id, path in _input_lines(Path(args.input)):
        line = read_rle(path)
        if args.mode == "words":
            records.append(word_record(line_id, segment_words(line, mode)))
        else:
            records.extend(
                line_char_records(line_id, segment_line_chars(line, params, mode))
            )
    _emit(dumps(records), args.out)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    overlap = _setting(args, cfg, "overlap", float, 0.9)
    pred = json.loads(Path(args.pred).read_text(encoding="utf-8"))
    truth = load_ground_truth(args.truth)
    report = evaluate_records(pred, truth, mode=args.mode, overlap_min=overlap)
    _emit(dumps(report), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    params = _resolve_params(args, cfg)
    mode = _resolve_mode(args, cfg)
    paths = [p for _, p in _input_lines(Path(args.input))]
    rows = benchmod.bench_paths(paths, params, mode, repeat=args.repeat)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            benchmod.write_csv(rows, fh)
    else:
        benchmod.write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_synth(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    config = SynthConfig(
        lines=args.lines,
        words_per_line=args.words_per_line,
        inter_gap=args.inter_gap,
        intra_gap=args.intra_gap,
        touch_rate=args.touch_rate,
        seed=_setting(args, cfg, "seed", int, 0),
    )
    paths = write_corpus(config, args.out)
    print(f"wrote {len(paths)} lines under {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    line = read_rle(args.rle)
    seg = json.loads(Path(args.seg).read_text(encoding="utf-8"))
    stem = Path(args.rle).stem
    xs = sorted(
        {
            sep["x"]
            for rec in seg
            if rec.get("line_id") == stem
            for sep in rec.get("separators", [])
        }
    )
    write_pbm(overlay(line, xs), args.out, binary=args.binary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlseg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="PBM (P1/P4) to .rle")
    p.add_argument("pbm")
    p.add_argument("rle")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help=".rle to PBM")
    p.add_argument("rle")
    p.add_argument("pbm")
    p.add_argument("--binary", action="store_true", help="write packed P4 instead of P1")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("segment", help="segment lines into words or characters")
    p.add_argument("input", help=".rle file, directory of .rle files, or manifest")
    p.add_argument("--mode", choices=("words", "chars"), default="words")
    p.add_argument("--threshold", type=ThresholdMode.parse, default=None,
                   help="auto | fixed:<value> | scale:<factor> (default auto)")
    p.add_argument("--roi-t", dest="roi_t", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--config", default=None, help="key=value config file; flags win")
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("evaluate", help="score predictions against ground truth")
    p.add_argument("pred", help="segmentation JSON from the segment command")
    p.add_argument("truth", help="ground-truth JSON")
    p.add_argument("--mode", choices=("word", "char"), default="word")
    p.add_argument("--overlap", type=float, default=None, help="minimum overlap fraction (default 0.9)")
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="time run-domain vs pixel-domain segmentation")
    p.add_argument("input", help=".rle file, directory, or manifest")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--threshold", type=ThresholdMode.parse, default=None)
    p.add_argument("--roi-t", dest="roi_t", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("synth", help="generate a synthetic corpus with exact ground truth")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--lines", type=int, default=20)
    p.add_argument("--words-per-line", dest="words_per_line", type=int, default=4)
    p.add_argument("--inter-gap", dest="inter_gap", type=int, default=12)
    p.add_argument("--intra-gap", dest="intra_gap", type=int, default=3)
    p.add_argument("--touch-rate", dest="touch_rate", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("render", help="overlay separators on the decoded line")
    p.add_argument("rle")
    p.add_argument("seg", help="segmentation JSON from the segment command")
    p.add_argument("out", help="output PBM path")
    p.add_argument("--binary", action="store_true")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EmptyLineError, EmptyWordError) as exc:
        print(f"rlseg: empty input: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except EmptyGroundTruthError as exc:
        print(f"rlseg: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (ParseError, MalformedRleError) as exc:
        print(f"rlseg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"rlseg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
