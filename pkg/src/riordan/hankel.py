"""Hankel transforms via fraction-free determinants, plus rational-GF matching.

Integer input goes through Bareiss elimination (exact, division-free in the
sense that every division is known to be exact); rational input falls back to
plain fractional Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class HankelMatrix:
    """The (dim x dim) matrix with entry (i, j) = source[i + j]."""

    source: tuple
    dim: int

    def __post_init__(self):
        if len(self.source) < 2 * self.dim - 1:
            raise ValueError(
                f"need {2 * self.dim - 1} terms for dimension {self.dim}, "
                f"got {len(self.source)}"
            )

    def entry(self, i: int, j: int):
        return self.source[i + j]

    def rows(self) -> list[list]:
        return [[self.source[i + j] for j in range(self.dim)] for i in range(self.dim)]


def _det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination; every interior division is exact."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _det_rational(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if not factor:
                continue
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return sign * det


def determinant(rows: list[list]):
    """Exact determinant of a square matrix of ints or Fractions."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return 1
    flat = [e for row in rows for e in row]
    if all(isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1) for e in flat):
        return _det_bareiss([[int(e) for e in row] for row in rows])
    return _det_rational([[Fraction(e) for e in row] for row in rows])


def hankel_transform(seq, m_max: int) -> list:
    """h_m = det(a_{i+j}) over 0 <= i,j <= m, for m = 0 .. m_max."""
    seq = tuple(seq)
    if len(seq) < 2 * m_max + 1:
        raise ValueError(
            f"need {2 * m_max + 1} sequence terms for m_max={m_max}, got {len(seq)}"
        )
    return [determinant(HankelMatrix(seq, m + 1).rows()) for m in range(m_max + 1)]


def expand_rational(num, den, n_terms: int) -> list[Fraction]:
    """Power-series coefficients of num(x)/den(x) by the linear recurrence
    c_n = (num_n - sum_{i>=1} den_i c_{n-i}) / den_0."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    if not den or den[0] == 0:
        raise ValueError("denominator needs a nonzero constant term")
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    for n in range(n_terms):
        acc = num[n] if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc * inv0)
    return out


@dataclass(frozen=True)
class GfMatchReport:
    """Outcome of comparing a sequence against a rational generating function."""

    n_checked: int
    first_mismatch: int | None  # index, or None when all terms agree

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def __bool__(self):
        return self.ok


def match_rational_gf(seq, num, den, n_check: int) -> GfMatchReport:
    """Expand num/den to n_check terms and report agreement with ``seq``."""
    seq = list(seq)
    if len(seq) < n_check:
        raise ValueError(f"sequence has {len(seq)} terms, need {n_check}")
    expansion = expand_rational(num, den, n_check)
    for i in range(n_check):
        if Fraction(seq[i]) != expansion[i]:
            return GfMatchReport(n_checked=n_check, first_mismatch=i)
    return GfMatchReport(n_checked=n_check, first_mismatch=None)
