"""Arithmetic kernel: numbers, rings, polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from riordan.exact import (
    QA,
    QAB,
    QY,
    binomial,
    catalan,
    exact_sqrt,
    fibonacci,
    format_element,
    jacobsthal,
)


class TestNumbers:
    def test_binomial_small(self):
        assert binomial(4, 2) == 6
        assert binomial(3, 1) == 3

    def test_binomial_boundaries(self):
        for n in range(10):
            assert binomial(n, 0) == 1
        assert binomial(5, 6) == 0
        assert binomial(5, -1) == 0
        assert binomial(-3, 2) == 0  # negative upper index is defined as 0

    @given(st.integers(0, 60), st.integers(0, 60))
    def test_pascal_recurrence(self, n, k):
        if 0 < k <= n:
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_catalan_values(self):
        assert catalan(0) == 1
        assert catalan(4) == 14
        assert catalan(5) == 42

    def test_catalan_integrality(self):
        # binom(2n, n) is divisible by n+1 even though the definition is rational
        for n in range(60):
            assert Fraction(binomial(2 * n, n), n + 1).denominator == 1
            assert catalan(n) == Fraction(binomial(2 * n, n), n + 1)

    def test_catalan_rejects_negative(self):
        with pytest.raises(ValueError):
            catalan(-1)

    def test_jacobsthal_seed_and_recurrence(self):
        assert jacobsthal(1) == 1
        assert jacobsthal(2) == 1
        assert jacobsthal(3) == 3  # J_2 + 2 J_1
        assert jacobsthal(5) == 11
        assert [jacobsthal(n) for n in range(1, 7)] == [1, 1, 3, 5, 11, 21]
        for n in range(2, 30):
            assert jacobsthal(n) == jacobsthal(n - 1) + 2 * jacobsthal(n - 2)

    def test_jacobsthal_rejects_negative(self):
        with pytest.raises(ValueError):
            jacobsthal(-2)

    def test_fibonacci(self):
        assert [fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]

    def test_exact_sqrt(self):
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert exact_sqrt(Fraction(0)) == 0
        with pytest.raises(ValueError):
            exact_sqrt(Fraction(2))
        with pytest.raises(ValueError):
            exact_sqrt(Fraction(-4))


class TestRationalInvariants:
    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool))
    def test_always_normalized(self, p, q):
        from math import gcd

        x = Fraction(p, q)
        assert x.denominator > 0
        assert gcd(x.numerator, x.denominator) == 1

    def test_zero_is_canonical(self):
        assert Fraction(0, 7) == Fraction(0, 1)
        assert Fraction(0, 7).denominator == 1


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=20
)


def poly_y(draw_coeffs):
    return QY.poly(draw_coeffs)


polys = st.lists(rationals, max_size=9).map(poly_y)


class TestPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        p = QY.poly([1, 2, 0, 0])
        assert p.degree == 1
        assert QY.poly([0, 0]).degree == -1
        assert not QY.poly([])

    def test_generator_and_eval(self):
        y = QY.generator()
        p = y ** 3 + 2 * y
        assert p(Fraction(2)) == 12
        assert p.coeffs == (Fraction(0), Fraction(2), Fraction(0), Fraction(1))

    def test_scalar_mixing(self):
        y = QY.generator()
        assert (y + 1) - 1 == y
        assert 2 * y == y + y
        assert (2 * y) / 2 == y
        assert y * Fraction(1, 2) == y / 2

    def test_unit_division_only(self):
        y = QY.generator()
        with pytest.raises(ZeroDivisionError):
            (y ** 2) / y
        with pytest.raises(ZeroDivisionError):
            y / 0

    @given(polys, polys, polys)
    def test_distributivity(self, p, q, r):
        assert (p + q) * r == p * r + q * r

    @given(polys, polys)
    def test_commutativity(self, p, q):
        assert p * q == q * p
        assert p + q == q + p

    @given(polys, polys, polys)
    def test_mul_associativity(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    def test_power(self):
        y = QY.generator()
        assert (1 + y) ** 3 == 1 + 3 * y + 3 * y ** 2 + y ** 3
        assert (y ** 0) == 1

    def test_shift_down(self):
        y = QY.generator()
        p = 3 * y ** 4 - y ** 6
        assert p.shift_down(3) == 3 * y - y ** 3
        with pytest.raises(ValueError):
            (1 + y).shift_down(1)

    def test_bivariate_nesting(self):
        a = QAB.coerce(QA.generator())
        b = QAB.generator()
        p = (a + b) ** 2
        assert p == a * a + 2 * a * b + b * b
        # evaluating at b = 1 collapses to a polynomial in a
        collapsed = p(Fraction(1))
        assert collapsed.ring == QA
        assert collapsed == (QA.generator() + 1) ** 2

    def test_mixed_rings_rejected(self):
        y = QY.generator()
        a = QA.generator()
        with pytest.raises(TypeError):
            y + a

    def test_padded(self):
        p = QY.poly([1, 2])
        assert p.padded(4) == [1, 2, 0, 0]
        with pytest.raises(ValueError):
            p.padded(1)

    def test_immutable(self):
        p = QY.poly([1, 2])
        with pytest.raises(AttributeError):
            p.coeffs = (Fraction(9),)


class TestFormatting:
    def test_rationals(self):
        assert format_element(Fraction(5)) == "5"
        assert format_element(Fraction(-3, 7)) == "-3/7"

    def test_polynomials(self):
        y = QY.generator()
        assert format_element(-(y ** 3) + 3 * y) == "-y^3+3*y"
        assert format_element(2 * y ** 2 - 6 * y + 1) == "2*y^2-6*y+1"
        assert format_element(QY.zero()) == "0"
        assert format_element(y / 2) == "1/2*y"

    def test_bivariate(self):
        a = QAB.coerce(QA.generator())
        b = QAB.generator()
        assert format_element(14 * b ** 2 + 42 * a ** 2 * b + 14 * a ** 4) == (
            "14*b^2+42*a^2*b+14*a^4"
        )
