"""Exact arithmetic kernel: rationals, nested polynomial rings, small number helpers.

Every other module is generic over a coefficient ring.  A ring is described by
a lightweight descriptor object (``QQ``, ``QY``, ``QA``, ``QAB``) exposing
``zero``/``one``/``from_int``/``coerce``/``is_zero``/``invert``/``sqrt``.
Scalars are ``fractions.Fraction`` values, which already guarantee the
invariants required here (normalized, positive denominator, zero is 0/1).
Bivariate polynomials in a and b are realized as polynomials in b whose
coefficients are polynomials in a.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Base scalar type.  Always normalized: gcd(num, den) == 1 and den > 0.
ExactRational = Fraction

# The only polynomial variables that ever occur.
POLY_VARS = ("y", "a", "b")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside 0 <= k <= n.

    Negative n also returns 0: the falling-factorial extension to negative
    upper index is deliberately not provided, nothing downstream needs it.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """n-th Catalan number binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan: need n >= 0, got {n}")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    if r:  # cannot happen, kept as a divisibility guard
        raise ArithmeticError(f"catalan({n}) not integral")
    return q


def fibonacci(n: int) -> int:
    """Fibonacci numbers with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError(f"fibonacci: need n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def jacobsthal(n: int) -> int:
    """Jacobsthal numbers: J_0 = 0, J_1 = J_2 = 1, J_n = J_{n-1} + 2 J_{n-2}.

    This indexing makes 1/(1 - x - 2x^2) the generating function of J_{n+1}.
    """
    if n < 0:
        raise ValueError(f"jacobsthal: need n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, b + 2 * a
    return a


def exact_sqrt(q: Fraction) -> Fraction:
    """Nonnegative square root of a rational, or ValueError if not exact."""
    if q < 0:
        raise ValueError(f"exact_sqrt: {q} is negative")
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"exact_sqrt: {q} is not a perfect square")
    return Fraction(rn, rd)


class RationalField:
    """Descriptor for Q, the base coefficient field."""

    var = None

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def is_zero(self, x) -> bool:
        return not x

    def invert(self, x: Fraction) -> Fraction:
        if not x:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / self.coerce(x)

    def sqrt(self, x) -> Fraction:
        return exact_sqrt(self.coerce(x))

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PolynomialRing:
    """Descriptor for base[var], dense univariate polynomials over ``base``."""

    def __init__(self, base, var: str):
        if var not in POLY_VARS:
            raise ValueError(f"polynomial variable must be one of {POLY_VARS}")
        self.base = base
        self.var = var

    def poly(self, coeffs) -> "Polynomial":
        """Polynomial from an ascending coefficient list (index = degree)."""
        return Polynomial(self, [self.base.coerce(c) for c in coeffs])

    def const(self, c) -> "Polynomial":
        return Polynomial(self, [self.base.coerce(c)])

    def generator(self) -> "Polynomial":
        return Polynomial(self, [self.base.zero(), self.base.one()])

    def zero(self) -> "Polynomial":
        return Polynomial(self, [])

    def one(self) -> "Polynomial":
        return self.const(self.base.one())

    def from_int(self, n: int) -> "Polynomial":
        return self.const(self.base.from_int(n))

    def coerce(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return self.const(self.base.coerce(x))  # element of the base chain
        return self.const(self.base.coerce(x))

    def is_zero(self, x) -> bool:
        return isinstance(x, Polynomial) and not x.coeffs and x.ring == self

    def invert(self, x) -> "Polynomial":
        """Inverse of a unit: only degree-0 polynomials with invertible constant."""
        p = self.coerce(x)
        if p.degree > 0:
            raise ZeroDivisionError(f"{p} is not a unit of {self}")
        if not p.coeffs:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        return self.const(self.base.invert(p.coeffs[0]))

    def sqrt(self, x) -> "Polynomial":
        p = self.coerce(x)
        if p.degree > 0:
            raise ValueError(f"square root of non-constant polynomial {p}")
        if not p.coeffs:
            return self.zero()
        return self.const(self.base.sqrt(p.coeffs[0]))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.var == other.var
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.var, self.base))


class Polynomial:
    """Dense univariate polynomial over a coefficient ring.

    Stored normalized: the highest-index coefficient is nonzero, the zero
    polynomial has an empty coefficient tuple.  Immutable.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolynomialRing, coeffs):
        coeffs = list(coeffs)
        while coeffs and ring.base.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        """Coefficient of var^k (zero beyond the stored degree)."""
        if k < 0:
            raise IndexError(f"negative coefficient index {k}")
        if k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.base.zero()

    def padded(self, length: int) -> list:
        """Ascending coefficients padded with zeros to exactly ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} exceeds padded length {length}")
        zero = self.ring.base.zero()
        return list(self.coeffs) + [zero] * (length - len(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # Constants hash like their constant so x == c implies equal hashes.
        if not self.coeffs:
            return hash(0)
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.ring.var, self.coeffs))

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __add__(self, other):
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero()
        base = self.ring.base
        out = [base.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if base.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                if base.is_zero(cb):
                    continue
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a unit of the ring (constant); anything else raises."""
        return self * self.ring.invert(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"polynomial power needs integer n >= 0, got {n!r}")
        result = self.ring.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def __call__(self, value):
        """Evaluate by Horner at a point of the coefficient ring."""
        base = self.ring.base
        v = base.coerce(value)
        acc = base.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift_down(self, k: int) -> "Polynomial":
        """Exact division by var^k; raises unless divisible."""
        for c in self.coeffs[:k]:
            if not self.ring.base.is_zero(c):
                raise ValueError(f"{self} is not divisible by {self.ring.var}^{k}")
        return Polynomial(self.ring, self.coeffs[k:])

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.ring!r}: {self}>"


QQ = RationalField()
QY = PolynomialRing(QQ, "y")
QA = PolynomialRing(QQ, "a")
QAB = PolynomialRing(QA, "b")


def _format_coefficient(c) -> tuple[str, bool]:
    """Render a coefficient; the flag says whether it needs parentheses."""
    s = format_element(c)
    need_parens = ("+" in s[1:]) or ("-" in s[1:])
    return s, need_parens


def format_element(x) -> str:
    """Canonical exact rendering: integers bare, rationals p/q, polynomials
    in descending powers with explicit '*'."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Polynomial):
        if not x.coeffs:
            return "0"
        var = x.ring.var
        parts = []
        for k in range(x.degree, -1, -1):
            c = x.coeffs[k]
            if x.ring.base.is_zero(c):
                continue
            s, parens = _format_coefficient(c)
            if k == 0:
                term = f"({s})" if parens else s
            else:
                power = var if k == 1 else f"{var}^{k}"
                if parens:
                    term = f"({s})*{power}"
                elif s == "1":
                    term = power
                elif s == "-1":
                    term = f"-{power}"
                else:
                    term = f"{s}*{power}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("-")
                parts.append(term[1:])
            else:
                parts.append("+")
                parts.append(term)
        return "".join(parts)
    raise TypeError(f"cannot format {x!r}")
