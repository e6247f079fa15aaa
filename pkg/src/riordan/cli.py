"""Command-line front end: triangles, sequences, and identity verification.

Output is deterministic byte-for-byte for fixed inputs.  Exact values render
as decimal integers or "p/q"; polynomial entries use the same compact form as
the library.  Exit status is 0 only when every requested computation or
check succeeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families, verify
from .exact import QQ, format_element
from .gfparse import GfEvalError, ParseError, eval_gf
from .hankel import hankel_transform
from .series import DEFAULT_ORDER
from .triangles import (
    Triangle,
    build_exponential,
    build_ordinary,
    build_from_bgf,
    eval_rows,
    invert_triangle,
    row_sums,
)

TRIANGLE_NAMES = (
    "fib",
    "dual-fib",
    "tilde",
    "tildetilde",
    "a011973",
    "a111959",
    "i0-dual",
    "cf-coeff",
)
FORMATS = ("table", "csv", "json", "bfile")


class CliError(Exception):
    pass


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad {what} {text!r}: {exc}") from exc


def resolve_triangle(spec: str | None, gf: str | None, rows: int, order: int) -> Triangle:
    if (spec is None) == (gf is None):
        raise CliError("give exactly one of a triangle name or --gf")
    if rows < 1:
        raise CliError("--rows must be >= 1")
    if gf is not None:
        series = eval_gf(gf, max(rows, order))
        return build_from_bgf(series, rows)
    if spec.startswith("cf@"):
        return families.cf_matrix(_parse_rational(spec[3:], "cf@ value"), rows)
    if spec == "fib":
        return Triangle(QQ, [[families.fib_coeff(n, k) for k in range(n + 1)] for n in range(rows)])
    if spec == "dual-fib":
        return Triangle(
            QQ, [[families.dual_fib_coeff(n, k) for k in range(n + 1)] for n in range(rows)]
        )
    if spec == "tilde":
        return Triangle(QQ, [[families.tilde_coeff(n, k) for k in range(n + 1)] for n in range(rows)])
    if spec == "tildetilde":
        return Triangle(
            QQ,
            [
                [families.tildetilde_coeff(n, k) if 2 * k <= n else 0 for k in range(n + 1)]
                for n in range(rows)
            ],
        )
    if spec == "cf-coeff":
        return families.cf_coeff_triangle(rows)
    if spec == "a011973":
        return build_ordinary(families.pair_a011973(rows), rows)
    if spec == "a111959":
        return build_ordinary(families.pair_a111959(rows), rows)
    if spec == "i0-dual":
        return build_exponential(families.pair_exp_j0(rows), rows)
    raise CliError(
        f"unknown triangle {spec!r}; names: {', '.join(TRIANGLE_NAMES)}, cf@<rational>"
    )


def resolve_sequence(spec: str, n_terms: int, order: int) -> list:
    if n_terms < 1:
        raise CliError("-n must be >= 1")
    if spec.startswith("dual-cf@"):
        y0 = _parse_rational(spec[len("dual-cf@"):], "dual-cf@ value")
        polys = families.dual_cf_sequence(n_terms + 1)
        return [p(y0) for p in polys[1:]]
    if spec.startswith("rowsums:"):
        T = resolve_triangle(spec[len("rowsums:"):], None, n_terms, order)
        return row_sums(T)
    if spec.startswith("hankel:"):
        source = resolve_sequence(spec[len("hankel:"):], 2 * n_terms - 1, order)
        return hankel_transform(source, n_terms - 1)
    if spec.startswith("gf:"):
        series = eval_gf(spec[len("gf:"):], max(n_terms, order))
        return list(series.coeffs[:n_terms])
    raise CliError(
        f"unknown sequence {spec!r}; forms: dual-cf@<rational>, rowsums:<triangle>, "
        "hankel:<sequence>, gf:<expression>"
    )


def render_triangle(T: Triangle, fmt: str) -> str:
    if fmt == "csv":
        return T.to_csv()
    if fmt == "json":
        return T.to_json()
    if fmt == "bfile":
        raise CliError("bfile applies only to single sequences")
    cells = [[format_element(e) for e in row] for row in T.rows]
    widths = [0] * T.n_rows
    for row in cells:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    lines = [" ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) for row in cells]
    return "\n".join(lines)


def render_sequence(values: list, fmt: str, offset: int) -> str:
    cells = [format_element(v) for v in values]
    if fmt == "csv":
        return ",".join(cells)
    if fmt == "json":
        return json.dumps(cells)
    if fmt == "bfile":
        return "\n".join(f"{offset + i} {cell}" for i, cell in enumerate(cells))
    return " ".join(cells)


def render_reports(reports) -> tuple[str, bool]:
    lines = []
    total = failures = 0
    for rep in reports:
        lines.append(f"suite {rep.suite}:")
        for c in rep.checks:
            total += 1
            if c.ok:
                detail = f" ({c.detail})" if c.detail else ""
                lines.append(f"  PASS {c.name}{detail}")
            else:
                failures += 1
                lines.append(f"  FAIL {c.name}: {c.detail}")
        for note in rep.notes:
            lines.append(f"  {note}")
    lines.append(f"{total} checks, {failures} failed")
    return "\n".join(lines), failures == 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact triangles, dual polynomial sequences, and identity checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--order",
        type=int,
        default=DEFAULT_ORDER,
        help=f"working series truncation order (default {DEFAULT_ORDER})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="print a coefficient triangle", parents=[common])
    p_tri.add_argument("name", nargs="?", help=f"one of: {', '.join(TRIANGLE_NAMES)}, cf@<rational>")
    p_tri.add_argument("--gf", help="bivariate generating function in x and y")
    p_tri.add_argument("--rows", type=int, default=8, help="number of rows (default 8)")
    p_tri.add_argument("--invert", action="store_true", help="apply the inversion operator first")
    p_tri.add_argument("--eval-at", metavar="Y0", help="evaluate row polynomials at a rational y")
    p_tri.add_argument("--format", choices=FORMATS, default="table")
    p_tri.add_argument("--offset", type=int, default=0, help="b-file start index (default 0)")

    p_seq = sub.add_parser("sequence", help="print an exact sequence", parents=[common])
    p_seq.add_argument(
        "spec", help="dual-cf@<rational> | rowsums:<triangle> | hankel:<sequence> | gf:<expression>"
    )
    p_seq.add_argument("-n", "--terms", type=int, default=10, help="number of terms (default 10)")
    p_seq.add_argument("--format", choices=FORMATS, default="table")
    p_seq.add_argument("--offset", type=int, default=0, help="b-file start index (default 0)")

    p_ver = sub.add_parser("verify", help="run identity-verification suites")
    p_ver.add_argument("suite", choices=verify.SUITE_NAMES + ("all",))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "triangle":
            T = resolve_triangle(args.name, args.gf, args.rows, args.order)
            if args.invert:
                T = invert_triangle(T)
            if args.eval_at is not None:
                values = eval_rows(T, _parse_rational(args.eval_at, "--eval-at value"))
                print(render_sequence(values, args.format, args.offset))
            else:
                print(render_triangle(T, args.format))
            return 0
        if args.command == "sequence":
            values = resolve_sequence(args.spec, args.terms, args.order)
            print(render_sequence(values, args.format, args.offset))
            return 0
        text, ok = render_reports(verify.run(args.suite))
        print(text)
        return 0 if ok else 1
    except (CliError, ParseError, GfEvalError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
