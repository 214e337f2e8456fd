"""
Command-line interface.

    foldloop analyze  <word>                   fold report
    foldloop double   <word> [--twists T]      boundary circles of the band
    foldloop search   --m-max M --n-max N      fewest-crossing fold per loop count
    foldloop make-fold <m>                     alternating m-loop fold
    foldloop nest     <outer> <inner>          thread one fold through another
    foldloop render   <word> --format ascii|svg

Words use the text form of :mod:`foldloop.wordtext` and may come from
``--file PATH`` instead of the positional argument (``nest`` reads the outer
word from the first non-blank line and the inner from the second).

Every command except ``render`` prints one JSON object on stdout. Exit status
is 0 on success, 2 for malformed input, 3 when the request is well-formed but
impossible (an even-loop fold, a multi-component band core, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .band import FlatBand, boundary_linking_number, check_theorem, double, required_twists
from .errors import BoundsError, FoldloopError, WordSyntaxError
from .folds import fold_report, make_fold, nest, search_folds
from .render import render_diagram
from .wordtext import format_word, parse_word

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3

REPORT_FIELDS = (
    "m",
    "n",
    "writhe",
    "components",
    "valid",
    "required_twists",
    "lk",
    "theorem_holds",
)


def report(word) -> dict[str, Any]:
    """
    Serialisable fold report with fields in ``REPORT_FIELDS`` order.

    ``required_twists`` and ``lk`` (boundary linking number at zero twists)
    only exist for one-component cores and are ``None`` otherwise.
    """
    r = fold_report(word)
    if r.components == 1:
        twists = required_twists(word)
        lk = boundary_linking_number(FlatBand(word, 0))
    else:
        twists = lk = None
    return {
        "m": r.m,
        "n": r.n,
        "writhe": r.writhe,
        "components": r.components,
        "valid": r.valid,
        "required_twists": twists,
        "lk": lk,
        "theorem_holds": check_theorem(word).theorem_holds,
    }


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _word_source(p: argparse.ArgumentParser, name: str = "word") -> None:
    p.add_argument(name, nargs="?", help="braid word text, e.g. 'm=3 1 -2'")
    p.add_argument("--file", help="read the word text from this file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="foldloop", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="report loops, crossings, writhe and fold validity")
    _word_source(p)

    p = sub.add_parser("double", help="2-cable the core into its boundary circles")
    _word_source(p)
    p.add_argument("--twists", type=int, default=0, help="signed full twists of the band")

    p = sub.add_parser("search", help="exhaustive fold search")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores, capped by FOLDLOOP_THREADS)")

    p = sub.add_parser("make-fold", help="alternating fold with m loops")
    p.add_argument("m", type=int)

    p = sub.add_parser("nest", help="thread the inner fold through the outer fold's last loop")
    p.add_argument("outer", nargs="?")
    p.add_argument("inner", nargs="?")
    p.add_argument("--file", help="outer word on the first line, inner on the second")

    p = sub.add_parser("render", help="draw the closed braid")
    _word_source(p)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    return parser


class _UsageError(Exception):
    pass


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return [line for line in fh.read().splitlines() if line.strip()]
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _one_word(args: argparse.Namespace):
    if args.file is not None:
        if args.word is not None:
            raise _UsageError("give the word either inline or with --file, not both")
        return parse_word(" ".join(_read_lines(args.file)))
    if args.word is None:
        raise _UsageError("missing word")
    return parse_word(args.word)


def _emit(obj: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _run(args: argparse.Namespace) -> None:
    cmd = args.command
    if cmd == "analyze":
        word = _one_word(args)
        _emit({"word": format_word(word), **report(word)})
    elif cmd == "double":
        word = _one_word(args)
        band = FlatBand(word, args.twists)
        d = double(band)
        _emit(
            {
                "core": format_word(word),
                "twists": args.twists,
                "doubled": format_word(d.word),
                "lk": boundary_linking_number(band),
            }
        )
    elif cmd == "search":
        if args.m_max < 1 or args.n_max < 0:
            raise _UsageError("need --m-max >= 1 and --n-max >= 0")
        summary = search_folds(args.m_max, args.n_max, workers=args.workers)
        _emit(
            {
                "m_max": args.m_max,
                "n_max": args.n_max,
                "per_m": {
                    str(m): {
                        "fold_found": r.fold_found,
                        "minimal_n": r.minimal_n,
                        "witness": format_word(r.witness) if r.witness is not None else None,
                    }
                    for m, r in summary.per_m.items()
                },
            }
        )
    elif cmd == "make-fold":
        _emit({"m": args.m, "word": format_word(make_fold(args.m))})
    elif cmd == "nest":
        if args.file is not None:
            if args.outer is not None or args.inner is not None:
                raise _UsageError("give the words either inline or with --file, not both")
            lines = _read_lines(args.file)
            if len(lines) != 2:
                raise _UsageError(f"{args.file}: expected 2 non-blank lines, found {len(lines)}")
            outer_text, inner_text = lines
        else:
            if args.outer is None or args.inner is None:
                raise _UsageError("nest needs an outer and an inner word")
            outer_text, inner_text = args.outer, args.inner
        result = nest(parse_word(outer_text), parse_word(inner_text))
        _emit({"word": format_word(result), "loops": result.strands})
    elif cmd == "render":
        sys.stdout.write(render_diagram(_one_word(args), args.format))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except (WordSyntaxError, BoundsError, _UsageError) as exc:
        print(f"foldloop: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FoldloopError as exc:
        print(f"foldloop: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
