"""Named polynomial families and matrices: closed-form coefficients, the
generalized central pairs, and the several equivalent routes to the dual
Fibonacci polynomials.

Family indexing: the five Fibonacci-like families start at index 0 with the
zero polynomial (family(0) = 0, family(1) = 1); coefficient triangles index
rows from the degree-0 polynomial of index 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache

from .exact import QQ, QY, QA, QAB, Polynomial, binomial, catalan
from .series import PowerSeries, from_coeffs, x_series, generator_series
from .triangles import RiordanPair, Triangle, build_exponential

FAMILY_NAMES = (
    "fib",
    "dual_fib",
    "tilde_fib",
    "tildetilde_fib",
    "cf",
    "dual_cf",
    "reciprocal",
)


def _exact_int_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} not divisible by {den}")
    return q


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise IndexError(f"triangle index ({n}, {k}) out of range")


def fib_coeff(n: int, k: int) -> int:
    """Fibonacci coefficient triangle: binomial((n+k)/2, k) when n-k is even.

    The parity gate is on n-k; gating on n alone would zero out the odd rows,
    contradicting the triangle itself (see verify's discrepancy notes).
    """
    _check_indices(n, k)
    if (n - k) % 2:
        return 0
    return binomial((n + k) // 2, k)


def dual_fib_coeff(n: int, k: int) -> int:
    """Dual Fibonacci coefficients binom(n,k) * C_((n-k)/2) * (-1)^((n+k)/2)."""
    _check_indices(n, k)
    if (n - k) % 2:
        return 0
    return binomial(n, k) * catalan((n - k) // 2) * (-1) ** ((n + k) // 2)


def tilde_coeff(n: int, k: int) -> int:
    """Entries (-1)^k/(k+1) binom(n,k) binom(k+1, n-k+1); always integral."""
    _check_indices(n, k)
    return (-1) ** k * _exact_int_div(
        binomial(n, k) * binomial(k + 1, n - k + 1), k + 1
    )


def tildetilde_coeff(n: int, k: int) -> int:
    """Entries binom(n,2k) C_k (-1)^(n-k) of the inverted stretched array."""
    if n < 0 or k < 0 or 2 * k > n:
        raise IndexError(f"index ({n}, {k}) out of range (need 0 <= 2k <= n)")
    return binomial(n, 2 * k) * catalan(k) * (-1) ** (n - k)


@cache
def _dual_cf_series(order: int) -> PowerSeries:
    """x(sqrt(1 - 4yx^2) - x) over Q[y]."""
    n = max(order, 2)
    x = x_series(QY, n)
    y = generator_series(QY, "y", n)
    return (x * ((1 - 4 * y * x * x).sqrt() - x)).truncate(order)


@cache
def _reciprocal_series(order: int) -> PowerSeries:
    """1/(sqrt(1 - 4yx^2) - x) over Q[y]."""
    n = max(order, 2)
    x = x_series(QY, n)
    y = generator_series(QY, "y", n)
    return (1 / ((1 - 4 * y * x * x).sqrt() - x)).truncate(order)


def family_poly(name: str, n: int) -> Polynomial:
    """The n-th member of a named family, as a polynomial in y."""
    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")
    if n < 0:
        raise ValueError(f"family index must be >= 0, got {n}")
    if name == "dual_cf":
        return _dual_cf_series(n + 1)[n]
    if name == "reciprocal":
        return _reciprocal_series(n + 1)[n]
    if n == 0:
        return QY.zero()
    m = n - 1
    if name == "fib":
        return QY.poly([fib_coeff(m, k) for k in range(m + 1)])
    if name == "dual_fib":
        return QY.poly([dual_fib_coeff(m, k) for k in range(m + 1)])
    if name == "tilde_fib":
        return QY.poly([tilde_coeff(m, k) for k in range(m + 1)])
    if name == "tildetilde_fib":
        return QY.poly([tildetilde_coeff(m, k) for k in range(m // 2 + 1)])
    # cf: Catalan-scaled Fibonacci polynomial
    return catalan(m) * family_poly("fib", n)


def _pochhammer(x: Fraction, j: int) -> Fraction:
    acc = Fraction(1)
    for i in range(j):
        acc *= x + i
    return acc


def tilde_poly_hypergeom(n: int) -> Polynomial:
    """Terminating Gauss-sum evaluation y^n 2F1((1-n)/2, -n/2; 2; -4/y).

    Multiplying by y^n before summing keeps every term polynomial.  Matches
    the tilde matrix rows at even n and is (-1)^n times them at odd n; the
    matrix values are authoritative (see verify's discrepancy notes).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n // 2 + 1):
        term = (
            _pochhammer(Fraction(1 - n, 2), j)
            * _pochhammer(Fraction(-n, 2), j)
            / (_pochhammer(Fraction(2), j) * math.factorial(j))
            * Fraction(-4) ** j
        )
        coeffs[n - j] += term
    return QY.poly(coeffs)


@cache
def cf_coeffs(n: int) -> Polynomial:
    """C_n sum_i binom(n-i, i) a^(n-2i) b^i over Q[a][b]."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    cn = catalan(n)
    b_coeffs = []
    for i in range(n // 2 + 1):
        mono = [QQ.zero()] * (n - 2 * i) + [QQ.from_int(cn * binomial(n - i, i))]
        b_coeffs.append(QA.poly(mono))
    return QAB.poly(b_coeffs)


@cache
def cf_matrix(b0: Fraction, n_rows: int) -> Triangle:
    """Catalan-scaled Fibonacci matrix at a fixed b: entry (n,k) is the
    coefficient of a^k in cf_coeffs(n) evaluated at b = b0."""
    if n_rows < 1:
        raise ValueError("need at least one row")
    b0 = QQ.coerce(b0)
    rows = []
    for n in range(n_rows):
        in_a = cf_coeffs(n)(b0)  # polynomial in a
        rows.append(in_a.padded(n + 1))
    return Triangle(QQ, rows)


@cache
def cf_coeff_triangle(n_rows: int) -> Triangle:
    """Coefficient array with entry (n,i) = C_n binom(n-i, i): row n lists the
    b-coefficients of cf_coeffs(n) at a = 1."""
    rows = []
    for n in range(n_rows):
        row = [catalan(n) * binomial(n - i, i) for i in range(n // 2 + 1)]
        rows.append(row + [0] * (n + 1 - len(row)))
    return Triangle(QQ, rows)


def dual_cf_sequence(n_terms: int) -> list[Polynomial]:
    """Coefficients of x(sqrt(1-4yx^2) - x) as polynomials in y, from x^0."""
    s = _dual_cf_series(n_terms)
    return list(s.coeffs[:n_terms])


def reciprocal_polys(n_terms: int) -> list[Polynomial]:
    """Coefficients of 1/(sqrt(1-4yx^2) - x): 1, 1, 2y+1, 4y+1, ..."""
    s = _reciprocal_series(n_terms)
    return list(s.coeffs[:n_terms])


# ---------------------------------------------------------------------------
# Riordan pairs for the named triangles.

def pair_fib(order: int) -> RiordanPair:
    """(1/(1-x^2), x/(1-x^2)), the Fibonacci coefficient triangle."""
    x = x_series(QQ, order)
    d = 1 / (1 - x * x)
    return RiordanPair(d, x * d)

def pair_x_plus_x2(order: int) -> RiordanPair:
    """(1, x(1+x)), the binom(k, n-k) triangle."""
    x = x_series(QQ, order)
    return RiordanPair(1 + 0 * x, x * (1 + x))

def pair_a011973(order: int) -> RiordanPair:
    """Stretched (1/(1-x), x^2/(1-x)), the binom(n-k, k) triangle."""
    x = x_series(QQ, order)
    d = 1 / (1 - x)
    return RiordanPair(d, x * x * d, kind="stretched")

def pair_central(a: Fraction, b: Fraction, order: int) -> RiordanPair:
    """(1/sqrt(1-4bx^2), a*x/sqrt(1-4bx^2)) at rational a, b."""
    x = x_series(QQ, order)
    d = 1 / (1 - 4 * QQ.coerce(b) * x * x).sqrt()
    return RiordanPair(d, QQ.coerce(a) * x * d)

def pair_a111959(order: int) -> RiordanPair:
    """(1/sqrt(1-4x^2), x/sqrt(1-4x^2))."""
    return pair_central(1, 1, order)


def bessel_j1_over_x(order: int) -> PowerSeries:
    """Series of J_1(2x)/x: sum (-1)^m x^(2m) / (m! (m+1)!)."""
    coeffs = [QQ.zero()] * order
    for m in range(0, (order + 1) // 2):
        coeffs[2 * m] = Fraction((-1) ** m, math.factorial(m) * math.factorial(m + 1))
    return from_coeffs(QQ, coeffs)


def bessel_j0(order: int) -> PowerSeries:
    """Series of J_0(2x): sum (-1)^m x^(2m) / (m!)^2."""
    coeffs = [QQ.zero()] * order
    for m in range(0, (order + 1) // 2):
        coeffs[2 * m] = Fraction((-1) ** m, math.factorial(m) ** 2)
    return from_coeffs(QQ, coeffs)


def pair_exp_j1(order: int) -> RiordanPair:
    """Exponential pair [J_1(2x)/x, -x]: the dual Fibonacci coefficient array."""
    return RiordanPair(bessel_j1_over_x(order), -x_series(QQ, order), kind="exponential")


def pair_exp_j0(order: int) -> RiordanPair:
    """Exponential pair [J_0(2x), -x]: the inversion of the central triangle."""
    return RiordanPair(bessel_j0(order), -x_series(QQ, order), kind="exponential")


# ---------------------------------------------------------------------------
# Four independent routes to the dual Fibonacci polynomials.

@cache
def dual_fib_polys_by_reversion(n_max: int) -> tuple[Polynomial, ...]:
    """Indices 0..n_max via series reversion of x/(1 - yx - x^2) in x."""
    order = n_max + 1
    x = x_series(QY, order)
    y = generator_series(QY, "y", order)
    F = x / (1 - y * x - x * x)
    return F.revert().coeffs


@cache
def dual_fib_polys_by_exponential(n_max: int) -> tuple[Polynomial, ...]:
    """Indices 0..n_max via the exponential array [J_1(2x)/x, -x]."""
    T = build_exponential(pair_exp_j1(n_max), n_max)
    return (QY.zero(),) + tuple(T.row_polynomials())


@cache
def dual_fib_polys_by_laurent(n_max: int) -> tuple[Polynomial, ...]:
    """Indices 0..n_max via sum_k t~_{n,k} y^(2k-n), normalized through y^n.

    The sum is a Laurent polynomial a priori; multiplying by y^n makes it
    polynomial, and the result is checked to be divisible by y^n before
    shifting back down.
    """
    out = [QY.zero()]
    for n in range(0, n_max):
        lifted = [QQ.zero()] * (2 * n + 1)
        for k in range(n + 1):
            lifted[2 * k] = QQ.from_int(tilde_coeff(n, k))
        out.append(QY.poly(lifted).shift_down(n))
    return tuple(out)


@cache
def dual_fib_polys_by_even_form(n_max: int) -> tuple[Polynomial, ...]:
    """Indices 0..n_max via sum_k t~~_{n,k} y^(n-2k)."""
    out = [QY.zero()]
    for n in range(0, n_max):
        coeffs = [QQ.zero()] * (n + 1)
        for k in range(n // 2 + 1):
            coeffs[n - 2 * k] = QQ.from_int(tildetilde_coeff(n, k))
        out.append(QY.poly(coeffs))
    return tuple(out)
