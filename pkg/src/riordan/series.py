"""Truncated formal power series in x over an exact coefficient ring.

A series carries exactly ``order`` coefficients c_0 .. c_{order-1}; binary
operations truncate to the smaller order, so precision can shrink but never
silently degrade.  Everything is exact: composition and reversion are solved
coefficient by coefficient in the ring, square roots require the constant
term to have an exact root.
"""

from __future__ import annotations

from .exact import PolynomialRing

DEFAULT_ORDER = 32


class PowerSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(ring.coerce(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        """Number of retained coefficients."""
        return len(self.coeffs)

    def __getitem__(self, n: int):
        """Coefficient of x^n; indexing past the truncation order is an error."""
        if not 0 <= n < len(self.coeffs):
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if order > len(self.coeffs):
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.ring, self.coeffs[:order])

    def _binary(self, other):
        if isinstance(other, PowerSeries):
            if other.ring != self.ring:
                raise TypeError(f"mixed series rings {self.ring!r} and {other.ring!r}")
            return other
        return None  # scalar

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __neg__(self):
        return PowerSeries(self.ring, [-c for c in self.coeffs])

    def __add__(self, other):
        g = self._binary(other)
        if g is None:
            if not self.coeffs:
                raise ValueError("cannot add a scalar to an order-0 series")
            c = self.ring.coerce(other)
            return PowerSeries(self.ring, (self.coeffs[0] + c,) + self.coeffs[1:])
        n = min(len(self.coeffs), len(g.coeffs))
        return PowerSeries(self.ring, [self.coeffs[i] + g.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -self.ring.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._binary(other)
        ring = self.ring
        if g is None:
            c = ring.coerce(other)
            return PowerSeries(ring, [a * c for a in self.coeffs])
        n = min(len(self.coeffs), len(g.coeffs))
        out = [ring.zero()] * n
        for i in range(n):
            a = self.coeffs[i]
            if ring.is_zero(a):
                continue
            for j in range(n - i):
                b = g.coeffs[j]
                if ring.is_zero(b):
                    continue
                out[i + j] = out[i + j] + a * b
        return PowerSeries(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Long division; the divisor needs an invertible constant term."""
        ring = self.ring
        g = self._binary(other)
        if g is None:
            inv = ring.invert(ring.coerce(other))
            return PowerSeries(ring, [a * inv for a in self.coeffs])
        if not g.coeffs or ring.is_zero(g.coeffs[0]):
            raise ZeroDivisionError("division by series with zero constant term")
        inv0 = ring.invert(g.coeffs[0])
        n = min(len(self.coeffs), len(g.coeffs))
        out = []
        for k in range(n):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                b = g.coeffs[i]
                if ring.is_zero(b):
                    continue
                acc = acc - b * out[k - i]
            out.append(acc * inv0)
        return PowerSeries(ring, out)

    def __rtruediv__(self, other):
        return constant(self.ring, other, len(self.coeffs)) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"series power needs integer n >= 0, got {n!r}")
        result = one(self.ring, len(self.coeffs))
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def mul_x(self) -> "PowerSeries":
        """Multiply by x; the order grows by one (explicitly, never silently)."""
        return PowerSeries(self.ring, (self.ring.zero(),) + self.coeffs)

    def div_x(self) -> "PowerSeries":
        """Divide by x: shift coefficients down; the constant term must vanish."""
        if not self.coeffs:
            raise ValueError("cannot shift an order-0 series")
        if not self.ring.is_zero(self.coeffs[0]):
            raise ValueError("div_x needs a zero constant term")
        return PowerSeries(self.ring, self.coeffs[1:])

    def sqrt(self) -> "PowerSeries":
        """Square root with nonnegative constant-term root.

        Solved coefficientwise: q_n = (f_n - sum_{0<i<n} q_i q_{n-i}) / (2 q_0),
        so the constant term must have an exact root and 2*q_0 must be a unit.
        """
        ring = self.ring
        if not self.coeffs:
            raise ValueError("cannot take sqrt of an order-0 series")
        if ring.is_zero(self.coeffs[0]):
            raise ValueError("sqrt needs a nonzero constant term; shift powers of x out first")
        q0 = ring.sqrt(self.coeffs[0])
        inv = ring.invert(q0 + q0)
        out = [q0]
        for n in range(1, len(self.coeffs)):
            acc = self.coeffs[n]
            for i in range(1, n):
                a = out[i]
                if ring.is_zero(a):
                    continue
                acc = acc - a * out[n - i]
            out.append(acc * inv)
        return PowerSeries(ring, out)

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """f(g(x)) by Horner in the series ring; g must have zero constant term."""
        if not isinstance(g, PowerSeries) or g.ring != self.ring:
            raise TypeError("compose needs a series over the same ring")
        if not g.coeffs or not self.ring.is_zero(g.coeffs[0]):
            raise ValueError("compose needs inner series with zero constant term")
        n = min(len(self.coeffs), len(g.coeffs))
        f = self.coeffs[:n]
        g = g.truncate(n)
        acc = constant(self.ring, 0, n)
        for c in reversed(f):
            acc = acc * g + c
        return acc

    def revert(self) -> "PowerSeries":
        """Compositional inverse u with f(u(x)) = x = u(f(x)).

        Needs f = c_1 x + O(x^2) with c_1 a unit.  Solved order by order: with
        u known through x^{m-1}, the coefficient of x^m in f(u) is linear in
        the unknown u_m with leading factor c_1, so
        u_m = -[x^m](sum_{k>=2} c_k u^k) / c_1.  Powers of u are accumulated
        over the nonzero c_k only, truncated to m+1 terms.
        """
        ring = self.ring
        N = len(self.coeffs)
        if N < 2:
            raise ValueError("reversion needs order >= 2")
        if not ring.is_zero(self.coeffs[0]):
            raise ValueError("reversion needs a zero constant term")
        c1_inv = ring.invert(self.coeffs[1])
        tail_ks = [k for k in range(2, N) if not ring.is_zero(self.coeffs[k])]
        u = [ring.zero(), c1_inv]
        zero = ring.zero()
        for m in range(2, N):
            U = PowerSeries(ring, u + [zero] * (m + 1 - len(u)))
            acc = zero
            power = None
            last_k = 0
            for k in tail_ks:
                if k > m:
                    break
                if power is None:
                    power = U ** k
                else:
                    for _ in range(k - last_k):
                        power = power * U
                last_k = k
                acc = acc + self.coeffs[k] * power[m]
            u.append(-acc * c1_inv)
        return PowerSeries(ring, u)

    def __str__(self):
        from .exact import format_element

        parts = []
        for n, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            s = format_element(c)
            if ("+" in s[1:]) or ("-" in s[1:]):
                s = f"({s})"
            term = s if n == 0 else (f"{s}*x" if n == 1 else f"{s}*x^{n}")
            parts.append(term)
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^{self.order})"

    def __repr__(self):
        return f"<series over {self.ring!r}: {self}>"


def from_coeffs(ring, coeffs, order: int | None = None) -> PowerSeries:
    """Series from an explicit coefficient list, zero-padded to ``order``."""
    coeffs = [ring.coerce(c) for c in coeffs]
    if order is not None:
        if len(coeffs) > order:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        coeffs += [ring.zero()] * (order - len(coeffs))
    return PowerSeries(ring, coeffs)


def constant(ring, value, order: int) -> PowerSeries:
    return from_coeffs(ring, [value], order)


def one(ring, order: int) -> PowerSeries:
    return constant(ring, 1, order)


def x_series(ring, order: int) -> PowerSeries:
    return from_coeffs(ring, [0, 1], order)


def generator_series(ring: PolynomialRing, name: str, order: int) -> PowerSeries:
    """Constant series whose value is the named generator of the ring chain."""
    r = ring
    while isinstance(r, PolynomialRing):
        if r.var == name:
            return constant(ring, ring.coerce(r.generator()), order)
        r = r.base
    raise KeyError(f"ring {ring!r} has no generator {name!r}")
