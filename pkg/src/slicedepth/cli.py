"""Command-line front end: ``slicedepth <command> ...``.

Exit codes: 0 success, 1 condition not satisfied (only with ``--require``),
2 bad input.  Output is plain text (never colored) and deterministic.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .classify import (
    RibbonOneFusionData,
    SliceDepthVerdict,
    UnknottingBandData,
    analyze_two_bridge,
    classify_pretzel,
    classify_ribbon_one_fusion,
    classify_unknotting,
)
from .errors import SliceDepthError
from .notation import PretzelParams, parse_notation, render_notation
from .rational import even_cf, pell_family
from .table import emit_report, load_bundled_table, load_table, run_survey
from .words import build_word, reduces

DEFAULT_TWIST = 2
EXIT_OK, EXIT_UNSATISFIED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _band(text: str) -> tuple[int, int, int]:
    values = _int_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"--band takes sigma,w,lambda; got {text!r}")
    return tuple(values)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _word_repr(word: str) -> str:
    return word if word else "(empty)"


def _print_verdict(verdict: SliceDepthVerdict, out) -> None:
    print(f"twist: {verdict.twist}", file=out)
    for label, value in (("lower", verdict.lower), ("upper", verdict.upper)):
        print(f"{label} bound: {'none' if value is None else value}", file=out)
    if verdict.exact:
        print(f"slice depth: exactly {verdict.slice_depth}", file=out)
    for j in verdict.justifications:
        print(f"  {j.bound.value} {j.value}: {j.citation}", file=out)


def _finish(verdict: SliceDepthVerdict, args) -> int:
    if args.require and verdict.upper is None:
        return EXIT_UNSATISFIED
    return EXIT_OK


def cmd_two_bridge(args, out) -> int:
    parsed = parse_notation(args.notation).parsed
    if isinstance(parsed, PretzelParams):
        raise InputError("two-bridge expects C(...) or p/q notation")
    analysis = analyze_two_bridge(parsed, args.twist, not args.no_representative_search)
    chosen = analysis.chosen
    print(f"knot: {render_notation(parsed)}", file=out)
    print(f"fraction: {render_notation(analysis.fraction)}  determinant: {analysis.determinant}", file=out)
    for c in analysis.candidates:
        mark = "accepted" if c.accepted else "rejected"
        print(f"presentation {render_notation(c.fraction)} = {c.cf}: word {_word_repr(c.word)} {mark}", file=out)
    print(f"word: {_word_repr(chosen.word)}", file=out)
    _print_verdict(analysis.verdict, out)
    return _finish(analysis.verdict, args)


def cmd_pretzel(args, out) -> int:
    parsed = parse_notation(args.notation).parsed
    if not isinstance(parsed, PretzelParams):
        raise InputError("pretzel expects P(p,q,r) notation")
    verdict = classify_pretzel(*parsed, args.twist, allow_i_zero=args.allow_i_zero)
    print(f"knot: {parsed}", file=out)
    _print_verdict(verdict, out)
    return _finish(verdict, args)


def cmd_ribbon(args, out) -> int:
    data = RibbonOneFusionData(args.a, args.sigma, args.w)
    verdict = classify_ribbon_one_fusion(data, args.twist)
    print(f"knot: R({','.join(map(str, data.windings))}) sigma={data.sigma} w={data.w}", file=out)
    print(f"twist total: {data.twist_total}", file=out)
    _print_verdict(verdict, out)
    return _finish(verdict, args)


def cmd_unknotting(args, out) -> int:
    data = UnknottingBandData(args.band)
    verdict = classify_unknotting(data, args.twist)
    print(f"bands: u={data.u}", file=out)
    for i, band in enumerate(data.bands, start=1):
        print(f"  S_{i}: sigma={band.sigma} w={band.w} lambda={band.wraps} total={band.twist_total}", file=out)
    _print_verdict(verdict, out)
    return _finish(verdict, args)


def cmd_pell(args, out) -> int:
    for rec in pell_family(args.d, args.count):
        cf = even_cf(rec.shifted)
        print(
            f"n={rec.index}  x/y={rec.convergent_x}/{rec.convergent_y}  "
            f"p/q={render_notation(rec.shifted)}  {cf}",
            file=out,
        )
    return EXIT_OK


def cmd_survey(args, out) -> int:
    if args.table:
        records = load_table(Path(args.table).read_bytes())
    else:
        records = load_bundled_table()
    data = emit_report(run_survey(records), args.format)
    out.flush()
    buffer = getattr(out, "buffer", None)
    if buffer is not None:
        buffer.write(data)
        buffer.flush()
    else:
        out.write(data.decode("utf-8"))
    return EXIT_OK


def cmd_word(args, out) -> int:
    parsed = parse_notation(args.notation).parsed
    if isinstance(parsed, PretzelParams):
        raise InputError("word expects C(...) or p/q notation")
    cf = even_cf(parsed) if isinstance(parsed, Fraction) else parsed
    word = build_word(cf)
    accepted, witness = reduces(word)
    print(f"knot: {cf}", file=out)
    print(f"word: {_word_repr(word)}", file=out)
    print(f"accepted={'true' if accepted else 'false'}", file=out)
    if args.trace and witness is not None:
        current = word
        for n, step in enumerate(witness.steps, start=1):
            print(f"  {n}. {step.rule} at {step.position}: "
                  f"{_word_repr(current)} -> {_word_repr(step.word_after)}", file=out)
            current = step.word_after
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicedepth",
        description="Slice-depth bounds for twist spins of classical knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def classify_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--twist", type=_positive, default=DEFAULT_TWIST,
                       help=f"twist n of the n-twist spin (default {DEFAULT_TWIST})")
        p.add_argument("--require", action="store_true",
                       help="exit 1 when no upper bound is obtained")
        p.set_defaults(func=func)
        return p

    p = classify_command("two-bridge", cmd_two_bridge, "2-bridge knot C(a1,...,am) or p/q")
    p.add_argument("notation")
    p.add_argument("--no-representative-search", action="store_true",
                   help="test only the given presentation")

    p = classify_command("pretzel", cmd_pretzel, "pretzel knot P(p,q,r)")
    p.add_argument("notation")
    p.add_argument("--allow-i-zero", action="store_true",
                   help="also accept i = 0, i.e. P(1,1,3)")

    p = classify_command("ribbon", cmd_ribbon, "ribbon knot of 1-fusion")
    p.add_argument("--a", type=_int_list, required=True, metavar="A1,...,AM",
                   help="winding numbers (use --a=-1,2 for a leading minus)")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--w", type=int, required=True)

    p = classify_command("unknotting", cmd_unknotting, "knot with u unknotting bands")
    p.add_argument("--band", type=_band, action="append", required=True, metavar="S,W,L",
                   help="sigma_i,w_i,lambda_i for one band; repeat per band")

    p = sub.add_parser("pell", help="Pell-equation family of accepted 2-bridge knots")
    p.add_argument("--d", type=int, choices=(5, 6), required=True)
    p.add_argument("--count", type=_positive, default=3)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("survey", help="run the word test over a knot table")
    p.add_argument("--table", help="CSV table (default: bundled Rolfsen 2-bridge table)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("word", help="O/E word of a 2-bridge knot and its reduction")
    p.add_argument("notation")
    p.add_argument("--trace", action="store_true", help="print the reduction steps")
    p.set_defaults(func=cmd_word)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (SliceDepthError, InputError, OSError) as exc:
        print(f"slicedepth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
