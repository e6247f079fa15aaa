"""Lower-triangular coefficient arrays and the generating-function inversion.

A triangle stores row n as exactly n+1 exact entries (zeros explicit) over a
single declared ring.  Triangles arise from Riordan pairs (d(x), h(x)), from
bivariate generating functions, and from the inversion operator: reverting
x times the row-polynomial generating function and re-expanding the rows.
"""

from __future__ import annotations

import json
import math

from .exact import QQ, PolynomialRing, Polynomial, format_element
from .series import PowerSeries, from_coeffs

RIORDAN_KINDS = ("ordinary", "exponential", "stretched")


class Triangle:
    """Immutable lower-triangular array; row n holds entries t_{n,0} .. t_{n,n}."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        coerced = []
        for n, row in enumerate(rows):
            row = [ring.coerce(e) for e in row]
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
            coerced.append(tuple(row))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", tuple(coerced))

    def __setattr__(self, name, value):
        raise AttributeError("Triangle is immutable")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int):
        return self.rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def row_polynomial_ring(self) -> PolynomialRing:
        return PolynomialRing(self.ring, "y")

    def row_polynomials(self) -> list[Polynomial]:
        """Row n as the polynomial sum_k t_{n,k} y^k."""
        ring = self.row_polynomial_ring()
        return [Polynomial(ring, row) for row in self.rows]

    def to_csv(self) -> str:
        """One row per line, comma separated, exact rendering."""
        return "\n".join(",".join(format_element(e) for e in row) for row in self.rows)

    def to_json(self) -> str:
        """JSON array of arrays of exact decimal strings."""
        return json.dumps([[format_element(e) for e in row] for row in self.rows])

    def __str__(self):
        return self.to_csv()

    def __repr__(self):
        return f"<Triangle over {self.ring!r}, {self.n_rows} rows>"


class RiordanPair:
    """A pair (d(x), h(x)) with d(0) != 0 and h(0) = 0.

    ``ordinary`` and ``exponential`` kinds additionally require h'(0) != 0;
    the ``stretched`` kind allows h'(0) = 0 for a nonzero h.
    """

    __slots__ = ("d", "h", "kind")

    def __init__(self, d: PowerSeries, h: PowerSeries, kind: str = "ordinary"):
        if kind not in RIORDAN_KINDS:
            raise ValueError(f"kind must be one of {RIORDAN_KINDS}")
        if d.ring != h.ring:
            raise TypeError("d and h must share a coefficient ring")
        ring = d.ring
        if d.order == 0 or ring.is_zero(d.coeffs[0]):
            raise ValueError("d must have a nonzero constant term")
        if h.order == 0 or not ring.is_zero(h.coeffs[0]):
            raise ValueError("h must have a zero constant term")
        if kind == "stretched":
            if all(ring.is_zero(c) for c in h.coeffs):
                raise ValueError("stretched pair needs a nonzero h")
        else:
            if h.order < 2 or ring.is_zero(h.coeffs[1]):
                raise ValueError(f"{kind} pair needs h'(0) != 0")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("RiordanPair is immutable")

    @property
    def ring(self):
        return self.d.ring

    def __repr__(self):
        return f"<{self.kind} Riordan pair over {self.ring!r}>"


def _column_series(pair: RiordanPair, n_rows: int):
    if min(pair.d.order, pair.h.order) < n_rows:
        raise ValueError(
            f"series order {min(pair.d.order, pair.h.order)} too small for {n_rows} rows"
        )
    col = pair.d.truncate(n_rows)
    h = pair.h.truncate(n_rows)
    for _ in range(n_rows):
        yield col
        col = col * h


def build_ordinary(pair: RiordanPair, n_rows: int) -> Triangle:
    """Triangle with t_{n,k} = [x^n] d(x) h(x)^k."""
    if pair.kind == "exponential":
        raise ValueError("pair is exponential; use build_exponential")
    cols = list(_column_series(pair, n_rows))
    rows = [[cols[k][n] for k in range(n + 1)] for n in range(n_rows)]
    return Triangle(pair.ring, rows)


def build_exponential(pair: RiordanPair, n_rows: int) -> Triangle:
    """Triangle with t_{n,k} = (n!/k!) [x^n] d(x) h(x)^k."""
    if pair.kind != "exponential":
        raise ValueError(f"pair kind is {pair.kind}, not exponential")
    cols = list(_column_series(pair, n_rows))
    rows = []
    for n in range(n_rows):
        fn = math.factorial(n)
        rows.append([cols[k][n] * (fn // math.factorial(k)) for k in range(n + 1)])
    return Triangle(pair.ring, rows)


def build_from_bgf(G: PowerSeries, n_rows: int) -> Triangle:
    """Rows from a bivariate generating function: row n is [x^n] G as a
    polynomial in the coefficient variable, padded to length n+1."""
    if G.order < n_rows:
        raise ValueError(f"series order {G.order} too small for {n_rows} rows")
    ring = G.ring
    rows = []
    for n in range(n_rows):
        c = G.coeffs[n]
        if isinstance(ring, PolynomialRing):
            if c.degree > n:
                raise ValueError(
                    f"coefficient of x^{n} has degree {c.degree}: not lower-triangular"
                )
            rows.append(c.padded(n + 1))
        else:
            rows.append([c] + [ring.zero()] * n)
    base = ring.base if isinstance(ring, PolynomialRing) else ring
    return Triangle(base, rows)


def invert_triangle(T: Triangle) -> Triangle:
    """The inversion operator: revert (in x) x times the row-polynomial
    generating function, divide by x, and re-expand the rows.

    Defined for numeric triangles with t_{0,0} = +-1; an involution."""
    if T.ring != QQ:
        raise TypeError("inversion is defined for triangles over Q")
    if T.n_rows == 0:
        raise ValueError("cannot invert an empty triangle")
    head = T.rows[0][0]
    if head * head != 1:
        raise ValueError(f"t_(0,0) = {head} is not invertible; need +-1")
    ring = T.row_polynomial_ring()
    G = from_coeffs(ring, T.row_polynomials())
    reverted = G.mul_x().revert().div_x()
    return build_from_bgf(reverted, T.n_rows)


def apply_series(pair: RiordanPair, f: PowerSeries) -> PowerSeries:
    """Act on a series: d(x) * f(h(x))."""
    if pair.kind == "exponential":
        raise ValueError("apply_series acts by the ordinary rule; pair is exponential")
    n = min(pair.d.order, pair.h.order, f.order)
    return pair.d.truncate(n) * f.truncate(n).compose(pair.h.truncate(n))


def row_sums(T: Triangle) -> list:
    out = []
    for row in T.rows:
        acc = T.ring.zero()
        for e in row:
            acc = acc + e
        out.append(acc)
    return out


def eval_rows(T: Triangle, y0) -> list:
    """Row polynomials evaluated at y0: sum_k t_{n,k} y0^k per row."""
    y0 = T.ring.coerce(y0)
    out = []
    for row in T.rows:
        acc = T.ring.zero()
        for e in reversed(row):
            acc = acc * y0 + e
        out.append(acc)
    return out
