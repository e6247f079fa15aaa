"""Identity-verification suites behind the CLI ``verify`` command.

Each suite runs a family of exact cross-checks at fixed desk-scale bounds and
reports one line per check.  Two long-standing formula/matrix mismatches are
deliberately surfaced as DISCREPANCY notes rather than patched: the matrix
values are ground truth throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import families, paths
from .exact import QQ, QAB, binomial, catalan, fibonacci, jacobsthal
from .hankel import hankel_transform, match_rational_gf
from .series import generator_series, x_series
from .triangles import (
    build_exponential,
    build_ordinary,
    invert_triangle,
    row_sums,
)

SUITE_NAMES = ("duality", "lagrange", "hankel", "paths", "fundamental", "involution")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


def _compare_sequences(label, got, want, report, detail_on_pass=""):
    got = list(got)
    want = list(want)
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            report.add(label, False, f"first mismatch at index {i}: {g} != {w}")
            return
    report.add(label, True, detail_on_pass)


def duality_suite() -> SuiteReport:
    report = SuiteReport("duality")
    n_max = 16
    routes = {
        "series reversion": families.dual_fib_polys_by_reversion(n_max),
        "exponential array": families.dual_fib_polys_by_exponential(n_max),
        "odd-power rows": families.dual_fib_polys_by_laurent(n_max),
        "even-power rows": families.dual_fib_polys_by_even_form(n_max),
    }
    reference = routes["series reversion"]
    for label, polys in routes.items():
        if label == "series reversion":
            continue
        _compare_sequences(
            f"route agreement: series reversion vs {label}",
            polys,
            reference,
            report,
            detail_on_pass=f"indices 0..{n_max}",
        )
    accessor = tuple(families.family_poly("dual_fib", n) for n in range(n_max + 1))
    _compare_sequences(
        "closed-form accessor matches reversion route",
        accessor,
        reference,
        report,
        detail_on_pass=f"indices 0..{n_max}",
    )

    # Discrepancy 1: the row formula binom((n+k)/2, k) * (1+(-1)^n)/2 with the
    # parity gate on n alone kills every odd row; the triangle requires the
    # gate on n-k.  Confirm both halves so the note states a verified fact.
    gate_n_differs = all(
        # the (1+(-1)^n)/2 factor is 0 for every entry of an odd row, yet
        # the triangle rows are nonzero there
        (1 + (-1) ** n) // 2 == 0
        and any(families.fib_coeff(n, k) for k in range(n + 1))
        for n in range(1, 13, 2)
    )
    gate_nk_matches = all(
        families.fib_coeff(n, k)
        == binomial((n + k) // 2, k) * (1 + (-1) ** (n - k)) // 2
        for n in range(13)
        for k in range(n + 1)
    )
    report.add(
        "discrepancy documented: row-formula parity gate",
        gate_n_differs and gate_nk_matches,
        "odd rows vanish under the n-parity gate; gate on n-k reproduces the triangle",
    )
    report.notes.append(
        "DISCREPANCY: the closed row formula binom((n+k)/2,k)*(1+(-1)^n)/2 "
        "zeroes every odd row; the printed triangle needs the parity gate on "
        "n-k, i.e. (1+(-1)^(n-k))/2.  The triangle is treated as ground truth."
    )

    # Discrepancy 2: the terminating 2F1 form equals the matrix rows at even
    # index and is sign-flipped at odd index.
    sign_pattern = all(
        families.tilde_poly_hypergeom(n)
        == (-1) ** n * families.family_poly("tilde_fib", n + 1)
        for n in range(1, 13)
    )
    flipped_at_odd = any(
        families.tilde_poly_hypergeom(n) != families.family_poly("tilde_fib", n + 1)
        for n in range(1, 13, 2)
    )
    report.add(
        "discrepancy documented: hypergeometric odd-index sign",
        sign_pattern and flipped_at_odd,
        "2F1 form equals (-1)^n times the matrix row polynomial",
    )
    report.notes.append(
        "DISCREPANCY: the closed form y^n*2F1((1-n)/2,-n/2;2;-4/y) matches the "
        "matrix row polynomials only up to a factor (-1)^n: it is sign-flipped "
        "at odd n.  Matrix values are treated as ground truth."
    )
    return report


def lagrange_suite() -> SuiteReport:
    report = SuiteReport("lagrange")
    n_max = 12
    order = n_max + 2
    x = x_series(QAB, order)
    a = generator_series(QAB, "a", order)
    b = generator_series(QAB, "b", order)
    f = x * ((1 - 4 * b * x * x).sqrt() - a * x)
    rev = f.revert()
    _compare_sequences(
        "reversion coefficients equal the bivariate closed form",
        [rev[n + 1] for n in range(n_max + 1)],
        [families.cf_coeffs(n) for n in range(n_max + 1)],
        report,
        detail_on_pass=f"n = 0..{n_max} over Q[a][b]",
    )

    # Coefficient-extraction identity: [x^(n+1)] Rev(f) = 1/(n+1) [x^n] (x/f)^(n+1).
    xq = x_series(QQ, order)
    for label, fq in (
        ("x - x^2", xq - xq * xq),
        ("x(sqrt(1-4x^2) - x)", xq * ((1 - 4 * xq * xq).sqrt() - xq)),
    ):
        revq = fq.revert()
        x_over_f = 1 / fq.div_x()
        ok = True
        detail = f"n = 0..{n_max}"
        for n in range(n_max + 1):
            lhs = revq[n + 1]
            rhs = (x_over_f ** (n + 1))[n] / Fraction(n + 1)
            if lhs != rhs:
                ok = False
                detail = f"mismatch at n={n}: {lhs} != {rhs}"
                break
        report.add(f"coefficient extraction for {label}", ok, detail)
    return report


def hankel_suite() -> SuiteReport:
    report = SuiteReport("hankel")
    s = families._dual_cf_series(20)
    for y0, printed, num, den in (
        (
            Fraction(1),
            [1, -3, 14, -32, 96, -208],
            [1, -1, 4],
            [1, 2, -4, -8],  # (1-2x)(1+2x)^2
        ),
        (
            Fraction(-1),
            [1, 1, -10, -16, 64, 112],
            [1, 1, -2, -8],
            [1, 0, 8, 0, 16],  # (1+4x^2)^2
        ),
    ):
        seq = [s[n + 1](y0) for n in range(19)]
        transform = hankel_transform(seq, 9)
        _compare_sequences(
            f"Hankel transform of duals at y={y0}",
            transform[:6],
            printed,
            report,
            detail_on_pass="first 6 values",
        )
        match = match_rational_gf(transform, num, den, 10)
        report.add(
            f"transform at y={y0} matches its rational generating function",
            match.ok,
            "10 terms" if match.ok else f"first mismatch at {match.first_mismatch}",
        )
    return report


def paths_suite() -> SuiteReport:
    report = SuiteReport("paths")
    n_max = 12

    level = paths.PathClass("motzkin", "level_steps")
    ok = all(
        paths.count_paths(level, n, k) == abs(families.dual_fib_coeff(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    report.add("level steps count |dual Fibonacci coefficients|", ok, f"n <= {n_max}")

    up = paths.PathClass("motzkin", "up_steps")
    ok = all(
        paths.count_paths(up, n, k) == binomial(n, 2 * k) * catalan(k)
        for n in range(n_max + 1)
        for k in range(n // 2 + 2)
    )
    report.add("up steps count binom(n,2k)*C_k", ok, f"n <= {n_max}")

    upl = paths.PathClass("motzkin", "up_plus_level_steps")
    ok = all(
        paths.count_paths(upl, n, k) == abs(families.tilde_coeff(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    report.add("up-plus-level steps count |inverted-pair coefficients|", ok, f"n <= {n_max}")

    grand = paths.PathClass("grand_motzkin", "level_steps")
    T = build_exponential(families.pair_exp_j0(n_max + 1), n_max + 1)
    ok = all(
        paths.count_paths(grand, n, k) == abs(T.entry(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    report.add("grand-path level steps count the exponential-array entries", ok, f"n <= {n_max}")

    ok = all(
        paths.count_tilings(n, k) == families.fib_coeff(n, k)
        for n in range(15)
        for k in range(n + 1)
    )
    report.add("square/domino tilings count the Fibonacci coefficients", ok, "n <= 14")

    motzkin_numbers = [1, 1, 2, 4, 9, 21, 51]
    got = [sum(paths.count_paths(level, n, k) for k in range(n + 1)) for n in range(7)]
    _compare_sequences("row sums give the Motzkin numbers", got, motzkin_numbers, report, "n <= 6")
    return report


def fundamental_suite() -> SuiteReport:
    report = SuiteReport("fundamental")
    order = 16
    for a0, b0 in ((1, 1), (1, 2), (2, 1)):
        pair = families.pair_central(a0, b0, order)
        T = build_ordinary(pair, order)
        x = x_series(QQ, order)
        direct = 1 / ((1 - 4 * b0 * x * x).sqrt() - a0 * x)
        _compare_sequences(
            f"row sums expand the reciprocal at (a,b)=({a0},{b0})",
            row_sums(T),
            direct.coeffs,
            report,
            detail_on_pass=f"order {order}",
        )

    # Bivariate row polynomials of the reciprocal, then the y-specialization.
    xab = x_series(QAB, 8)
    aa = generator_series(QAB, "a", 8)
    bb = generator_series(QAB, "b", 8)
    recip_ab = 1 / ((1 - 4 * bb * xab * xab).sqrt() - aa * xab)
    _compare_sequences(
        "bivariate reciprocal polynomials",
        [str(c) for c in recip_ab.coeffs[:7]],
        [
            "1",
            "a",
            "2*b+a^2",
            "4*a*b+a^3",
            "6*b^2+6*a^2*b+a^4",
            "16*a*b^2+8*a^3*b+a^5",
            "20*b^3+30*a^2*b^2+10*a^4*b+a^6",
        ],
        report,
        detail_on_pass="7 terms over Q[a][b]",
    )
    _compare_sequences(
        "reciprocal polynomials at a=1, b=y",
        [str(p) for p in families.reciprocal_polys(7)],
        ["1", "1", "2*y+1", "4*y+1", "6*y^2+6*y+1", "16*y^2+8*y+1", "20*y^3+30*y^2+10*y+1"],
        report,
        detail_on_pass="7 terms",
    )

    n_max = 12
    _compare_sequences(
        "row sums at b=1 are C_n * F_(n+1)",
        row_sums(families.cf_matrix(Fraction(1), n_max + 1)),
        [catalan(n) * fibonacci(n + 1) for n in range(n_max + 1)],
        report,
        detail_on_pass=f"n <= {n_max}, F by recurrence",
    )
    _compare_sequences(
        "row sums at b=2 are C_n * J_(n+1)",
        row_sums(families.cf_matrix(Fraction(2), n_max + 1)),
        [catalan(n) * jacobsthal(n + 1) for n in range(n_max + 1)],
        report,
        detail_on_pass=f"n <= {n_max}, J by recurrence",
    )
    return report


def involution_suite() -> SuiteReport:
    report = SuiteReport("involution")
    n_rows = 16
    order = n_rows + 1
    triangles = {
        "Fibonacci coefficient triangle": build_ordinary(families.pair_fib(order), n_rows),
        "(1, x+x^2) triangle": build_ordinary(families.pair_x_plus_x2(order), n_rows),
        "central coefficient triangle": build_ordinary(families.pair_a111959(order), n_rows),
    }
    for label, T in triangles.items():
        twice = invert_triangle(invert_triangle(T))
        report.add(f"double inversion restores {label}", twice == T, f"{n_rows} rows")
    return report


_SUITES = {
    "duality": duality_suite,
    "lagrange": lagrange_suite,
    "hankel": hankel_suite,
    "paths": paths_suite,
    "fundamental": fundamental_suite,
    "involution": involution_suite,
}


def run(suite: str) -> list[SuiteReport]:
    """Run one named suite, or all of them."""
    if suite == "all":
        return [fn() for fn in _SUITES.values()]
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES + ('all',)}")
    return [_SUITES[suite]()]
