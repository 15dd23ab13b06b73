"""Command-line front end.

Exit codes: 0 success, 1 parse/evaluation error, 2 law violation,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .coeffs import parse_rational
from .decorated import Alphabet, DecoratedSum
from .errors import AlphabetError, ParseError, RotaBaxterError, UnsupportedTermError
from .forest import enumerate_forests
from .morphism import PartialSumTarget, ScalarTarget, extend, free_target, generator_assignment
from .oracle import LAWS, check_law
from .textio import evaluate, format_ast, format_specialized, format_sum, parse, to_json
from .unitarization import factor_through_unit, unitarize_free

EXIT_OK, EXIT_PARSE, EXIT_LAW, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rbforest", description="Free Rota-Baxter algebras on planar rooted forests.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate an expression to its normal form")
    ev.add_argument("expr")
    ev.add_argument("--lambda", dest="lam", type=_rational, help="specialize the weight L to this rational")
    ev.add_argument("--json", action="store_true")

    en = sub.add_parser("enumerate", help="list forests with a given vertex count")
    en.add_argument("--vertices", type=int, required=True)
    kind = en.add_mutually_exclusive_group()
    kind.add_argument("--trees", action="store_true")
    kind.add_argument("--forests", action="store_true")
    en.add_argument("--ladder-free", action="store_true")
    en.add_argument("--max-depth", type=int)
    en.add_argument("--count", action="store_true")
    en.add_argument("--json", action="store_true")

    ch = sub.add_parser("check", help="exhaustively check an algebraic law")
    ch.add_argument("--law", required=True)
    ch.add_argument("--max-vertices", type=int, default=3)
    ch.add_argument("--alphabet", help="comma-separated symbols, required for decorated laws")
    ch.add_argument("--json", action="store_true")

    mp = sub.add_parser("map", help="apply the universal morphism to a target algebra")
    mp.add_argument("expr")
    mp.add_argument("--target", required=True, help="scalar | partial-sum:N | free")
    mp.add_argument("--lambda", dest="lam", type=_rational, help="weight of the target (required unless free)")
    mp.add_argument("--assign", action="append", default=[], metavar="x=VALUE")
    mp.add_argument("--unitarize", action="store_true", help="treat the input as an element of the nonunitary algebra")
    mp.add_argument("--json", action="store_true")

    rd = sub.add_parser("render", help="render an expression")
    rd.add_argument("expr")
    rd.add_argument("--format", choices=("ascii", "latex"), default="ascii")
    rd.add_argument("--raw", action="store_true", help="render the unevaluated expression")
    return p


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _cmd_eval(args) -> int:
    value = evaluate(parse(args.expr))
    if args.json:
        print(json.dumps(to_json(value)))
    elif args.lam is not None:
        print(format_specialized(value, args.lam))
    else:
        print(format_sum(value))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.vertices < 1:
        raise UsageError("--vertices must be >= 1")
    forests = enumerate_forests(
        args.vertices, trees_only=args.trees, ladder_free_only=args.ladder_free, max_depth=args.max_depth
    )
    if args.count:
        print(len(forests))
    elif args.json:
        print(json.dumps([f.code for f in forests]))
    else:
        for f in forests:
            print(f.code)
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.law not in LAWS:
        raise UsageError(f"unknown law {args.law!r}; choose from {', '.join(LAWS)}")
    if args.max_vertices < 1:
        raise UsageError("--max-vertices must be >= 1")
    alphabet = [s for s in args.alphabet.split(",") if s] if args.alphabet else None
    try:
        report = check_law(args.law, args.max_vertices, alphabet)
    except (ValueError, AlphabetError) as exc:
        raise UsageError(str(exc)) from exc
    print(report.dumps() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_LAW


def _parse_assignments(items: Sequence[str]) -> dict[str, list[Fraction]]:
    out: dict[str, list[Fraction]] = {}
    for item in items:
        name, sep, rest = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"malformed assignment {item!r}; expected x=VALUE")
        try:
            out[name.strip()] = [parse_rational(v) for v in rest.split(",")]
        except ValueError as exc:
            raise UsageError(f"malformed assignment {item!r}: {exc}") from exc
    return out


def _cmd_map(args) -> int:
    value = evaluate(parse(args.expr), decorated=True)
    kind = args.target.strip()
    symbols = sorted(value.symbols())
    if kind == "free":
        target = free_target(symbols or ["x"])
        f = generator_assignment(target.alphabet)
    else:
        if args.lam is None:
            raise UsageError("--lambda is required for this target")
        raw = _parse_assignments(args.assign)
        missing = [x for x in symbols if x not in raw]
        if missing:
            raise UsageError(f"no assignment for {', '.join(missing)}")
        if kind == "scalar":
            target = ScalarTarget(args.lam)
            f = {}
            for x, vals in raw.items():
                if len(vals) != 1:
                    raise UsageError(f"scalar target needs one value for {x}")
                f[x] = vals[0]
        elif kind.startswith("partial-sum:"):
            try:
                length = int(kind.split(":", 1)[1])
            except ValueError as exc:
                raise UsageError(f"malformed target {kind!r}") from exc
            if length < 1:
                raise UsageError("partial-sum length must be >= 1")
            target = PartialSumTarget(length, args.lam)
            f = {}
            for x, vals in raw.items():
                if len(vals) != length:
                    raise UsageError(f"{x} needs {length} comma-separated values")
                f[x] = target.element(vals)
        else:
            raise UsageError(f"malformed target {kind!r}; use scalar, partial-sum:N or free")

    if args.unitarize:
        result = factor_through_unit(f, target, unitarize_free(value))
    else:
        result = extend(f, target, value)

    if isinstance(result, DecoratedSum):
        if args.json:
            print(json.dumps(to_json(result)))
        elif args.lam is not None:
            print(format_specialized(result, args.lam))
        else:
            print(format_sum(result))
    elif isinstance(result, tuple):
        text = "(" + ",".join(_format_rational(q) for q in result) + ")"
        print(json.dumps([_format_rational(q) for q in result]) if args.json else text)
    else:
        print(json.dumps(_format_rational(result)) if args.json else _format_rational(result))
    return EXIT_OK


def _cmd_render(args) -> int:
    node = parse(args.expr)
    if args.raw:
        print(format_ast(node, args.format))
    else:
        print(format_sum(evaluate(node), args.format))
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "enumerate": _cmd_enumerate,
    "check": _cmd_check,
    "map": _cmd_map,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"rbforest: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"rbforest: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AlphabetError, UnsupportedTermError) as exc:
        print(f"rbforest: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RotaBaxterError as exc:
        print(f"rbforest: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
