"""Command line front end.

Subcommands: ``table`` prints the polynomial family, ``matrix`` renders the
band matrix, ``sequence`` evaluates the family at a rational point, and
``verify`` runs the full cross-check battery.

Exit codes: 0 on success (and when every verification check passes), 1 when
verification finds a mathematical discrepancy, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
from fractions import Fraction

from .algebra import BiPoly
from .bandmatrix import band_matrix, render_matrix
from .continuants import band_continuants
from .verify import render_report_text, run_verification


def canonical_json(payload) -> str:
    """Compact JSON with insertion-ordered keys, so equal payloads are
    byte-identical and output survives a parse/re-serialize round trip."""
    return json.dumps(payload, separators=(",", ":"))


def polynomial_json(r: int, n: int, poly: BiPoly) -> dict:
    """JSON object for one polynomial.

    Terms appear in canonical order and every coefficient is rendered as a
    decimal integer string, which keeps arbitrary-precision values exact in
    every JSON implementation.
    """
    terms = []
    for (dx, dy), coefficient in poly.sorted_terms():
        if coefficient.denominator != 1:
            raise ValueError(f"cannot serialize non-integer coefficient {coefficient}")
        terms.append({"dx": dx, "dy": dy, "c": str(coefficient.numerator)})
    return {"r": r, "n": n, "terms": terms}


def _rational(text: str) -> Fraction:
    # argparse only treats ValueError/TypeError as usage errors, so the
    # ZeroDivisionError from inputs like "1/0" needs translating.
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyband",
        description=(
            "Exact band continuant polynomials: print the family, render the "
            "defining matrix, evaluate integer sequences, and cross-verify "
            "the independent computation routes."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", help="print the polynomials for n = 0 .. n-max")
    table.add_argument("--r", type=int, required=True, help="band parameter, at least 2")
    table.add_argument("--n-max", type=int, default=8, help="largest n (default 8)")
    table.add_argument("--format", choices=("text", "json"), default="text")
    table.set_defaults(handler=_run_table)

    matrix = subparsers.add_parser("matrix", help="render the n x n band matrix")
    matrix.add_argument("--r", type=int, required=True, help="band parameter, at least 2")
    matrix.add_argument("--n", type=int, required=True, help="matrix dimension")
    matrix.set_defaults(handler=_run_matrix)

    sequence = subparsers.add_parser(
        "sequence", help="evaluate the family at a rational point (x, y)"
    )
    sequence.add_argument("--r", type=int, required=True, help="band parameter, at least 2")
    sequence.add_argument("--x", type=_rational, default=Fraction(1), help="x value (default 1)")
    sequence.add_argument("--y", type=_rational, default=Fraction(1), help="y value (default 1)")
    sequence.add_argument("--n-max", type=int, default=8, help="largest n (default 8)")
    sequence.set_defaults(handler=_run_sequence)

    verify = subparsers.add_parser("verify", help="cross-check all computation routes")
    verify.add_argument("--r-max", type=int, default=5, help="largest band parameter (default 5)")
    verify.add_argument("--n-max", type=int, default=9, help="largest dimension (default 9)")
    verify.add_argument("--order", type=int, default=30, help="series order for the ODE residual")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    # Fault-injection hooks for the test suite; deliberately undocumented.
    verify.add_argument("--corrupt", type=str, default=None, help=argparse.SUPPRESS)
    verify.add_argument(
        "--subdiagonal-step", type=int, choices=(1, -1), default=1, help=argparse.SUPPRESS
    )
    verify.set_defaults(handler=_run_verify)

    return parser


def _require_band_parameter(parser: argparse.ArgumentParser, r: int) -> None:
    if r < 2:
        parser.error(f"--r must be at least 2, got {r}")


def _run_table(args, parser) -> int:
    _require_band_parameter(parser, args.r)
    if args.n_max < 0:
        parser.error(f"--n-max must be nonnegative, got {args.n_max}")
    polynomials = band_continuants(args.r, args.n_max)
    if args.format == "json":
        payload = [polynomial_json(args.r, n, poly) for n, poly in enumerate(polynomials)]
        print(canonical_json(payload))
    else:
        for poly in polynomials:
            print(poly)
    return 0


def _run_matrix(args, parser) -> int:
    _require_band_parameter(parser, args.r)
    if args.n < 0:
        parser.error(f"--n must be nonnegative, got {args.n}")
    rendering = render_matrix(band_matrix(args.r, args.n))
    if rendering:
        print(rendering)
    return 0


def _run_sequence(args, parser) -> int:
    _require_band_parameter(parser, args.r)
    if args.n_max < 0:
        parser.error(f"--n-max must be nonnegative, got {args.n_max}")
    for poly in band_continuants(args.r, args.n_max):
        print(poly.evaluate(args.x, args.y))
    return 0


def _parse_corrupt(parser: argparse.ArgumentParser, text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        parser.error("--corrupt expects R,N,I,J")
    try:
        r, n, i, j = (int(part) for part in parts)
    except ValueError:
        parser.error("--corrupt expects four integers")
    if r < 2 or n < 0 or i < 1 or j < 1:
        parser.error("--corrupt values out of range (need R>=2, N>=0, I>=1, J>=1)")
    return (r, n, i, j)


def _run_verify(args, parser) -> int:
    if args.r_max < 2:
        parser.error(f"--r-max must be at least 2, got {args.r_max}")
    if args.n_max < 0:
        parser.error(f"--n-max must be nonnegative, got {args.n_max}")
    if args.order < 1:
        parser.error(f"--order must be at least 1, got {args.order}")
    corrupt = _parse_corrupt(parser, args.corrupt) if args.corrupt is not None else None
    report = run_verification(
        r_max=args.r_max,
        n_max=args.n_max,
        order=args.order,
        corrupt=corrupt,
        subdiagonal_step=args.subdiagonal_step,
    )
    if args.format == "json":
        print(canonical_json(report.to_dict()))
    else:
        print(render_report_text(report))
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)
