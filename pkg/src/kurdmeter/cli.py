"""Command-line interface: ``kurdmeter classify|explain|eval``."""
from __future__ import annotations

import argparse
import logging
import sys

from . import report
from .corpus import evaluate, load_corpus
from .errors import EmptyLine, EmptyPoem, MeterError, ParseError
from .pipeline import ARABIC, LATIN, analyze_poem
from .scansion import ScanConfig

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PIPELINE = 3


def _fraction(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{v} is not in [0, 1]")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-distance", type=_nonneg, default=4,
                   help="largest edit distance kept for a candidate-pattern pair (default 4)")
    p.add_argument("--quant-fraction", type=_fraction, default=0.9,
                   help="share of lines that must match the pattern exactly (default 0.9)")
    p.add_argument("--syllabic-fraction", type=_fraction, default=0.8,
                   help="share of lines that must share the modal syllable count (default 0.8)")
    p.add_argument("--output", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kurdmeter", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, help_ in (("classify", "classify a poem"),
                        ("explain", "classify and show per-line scansion")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", help="poem file, one verse line per line (default stdin)")
        p.add_argument("--format", dest="input_format", choices=(ARABIC, LATIN), default=ARABIC,
                       help="Arabic-script text or romanized transcription")
        _add_config_args(p)
    p = sub.add_parser("eval", help="evaluate on a labeled JSON Lines corpus")
    p.add_argument("input", help="corpus file")
    p.add_argument("--csv", metavar="DIR", help="write confusion matrices as CSV into DIR")
    p.add_argument("--figures", metavar="DIR", help="write confusion and score figures into DIR")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_config_args(p)
    return parser


def config_from_args(args) -> ScanConfig:
    return ScanConfig(
        max_distance=args.max_distance,
        quant_fraction=args.quant_fraction,
        syllabic_fraction=args.syllabic_fraction,
    )


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run_classify(args, explain: bool = False) -> int:
    try:
        text = _read_input(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"kurdmeter: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not text.strip():
        print("kurdmeter: empty input", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = analyze_poem(text, config_from_args(args), args.input_format)
    except (EmptyPoem, EmptyLine) as exc:
        print(f"kurdmeter: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MeterError, ValueError) as exc:
        print(f"kurdmeter: pipeline failure: {exc}", file=sys.stderr)
        return EXIT_PIPELINE
    if args.output == "json":
        print(report.classification_json(result))
    elif explain:
        print(report.explain_text(result))
    else:
        print(report.classification_text(result))
    return EXIT_OK


def run_eval(args) -> int:
    try:
        records = load_corpus(args.input)
    except (OSError, UnicodeDecodeError, ParseError) as exc:
        print(f"kurdmeter: cannot load corpus: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ev = evaluate(records, config_from_args(args), jobs=max(1, args.jobs))
    if args.output == "json":
        print(report.evaluation_json(ev))
    else:
        print(report.evaluation_text(ev))
    if args.csv:
        for p in report.write_csv_dir(ev, args.csv):
            print(f"wrote {p}", file=sys.stderr)
    if args.figures:
        from .plotting import write_figures

        for p in write_figures(ev, args.figures):
            print(f"wrote {p}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.subcommand == "eval":
        return run_eval(args)
    return run_classify(args, explain=args.subcommand == "explain")


if __name__ == "__main__":
    sys.exit(main())
