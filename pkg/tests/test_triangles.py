"""Triangles: Riordan builders, the inversion operator, serialization."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import known_values as kv
from riordan.exact import QQ, QY, catalan, fibonacci, jacobsthal
from riordan.families import (
    cf_coeff_triangle,
    cf_matrix,
    pair_a011973,
    pair_a111959,
    pair_central,
    pair_exp_j0,
    pair_exp_j1,
    pair_fib,
    pair_x_plus_x2,
)
from riordan.series import from_coeffs, generator_series, x_series
from riordan.triangles import (
    RiordanPair,
    Triangle,
    apply_series,
    build_exponential,
    build_from_bgf,
    build_ordinary,
    eval_rows,
    invert_triangle,
    row_sums,
)


def rows_of(T):
    return [[int(e) for e in row] for row in T.rows]


def identity_pair(order, kind="ordinary"):
    x = x_series(QQ, order)
    return RiordanPair(1 + 0 * x, x, kind=kind)


class TestBuildOrdinary:
    def test_fibonacci_triangle(self):
        assert rows_of(build_ordinary(pair_fib(8), 6)) == kv.FIB_TRIANGLE

    def test_x_plus_x2_triangle(self):
        assert rows_of(build_ordinary(pair_x_plus_x2(8), 6)) == kv.X_PLUS_X2_TRIANGLE

    def test_central_triangle(self):
        assert rows_of(build_ordinary(pair_a111959(8), 6)) == kv.A111959_TRIANGLE

    def test_stretched_triangle(self):
        assert rows_of(build_ordinary(pair_a011973(8), 6)) == kv.A011973_TRIANGLE

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            build_ordinary(pair_fib(4), 6)

    def test_rejects_exponential_pair(self):
        with pytest.raises(ValueError):
            build_ordinary(pair_exp_j1(8), 6)


class TestBuildExponential:
    def test_dual_fib_array(self):
        assert rows_of(build_exponential(pair_exp_j1(8), 6)) == kv.DUAL_FIB_TRIANGLE

    def test_central_dual_array(self):
        assert rows_of(build_exponential(pair_exp_j0(8), 6)) == kv.I0_DUAL_TRIANGLE

    def test_identity(self):
        T = build_exponential(identity_pair(8, kind="exponential"), 6)
        assert rows_of(T) == [[1 if i == n else 0 for i in range(n + 1)] for n in range(6)]

    def test_rejects_ordinary_pair(self):
        with pytest.raises(ValueError):
            build_exponential(pair_fib(8), 6)


class TestBuildFromBgf:
    def test_fibonacci_bgf(self):
        x = x_series(QY, 8)
        y = generator_series(QY, "y", 8)
        G = 1 / (1 - y * x - x * x)
        assert rows_of(build_from_bgf(G, 6)) == kv.FIB_TRIANGLE

    def test_matches_riordan_route(self):
        x = x_series(QY, 12)
        y = generator_series(QY, "y", 12)
        G = 1 / (1 - y * x - x * x)
        assert build_from_bgf(G, 12) == build_ordinary(pair_fib(12), 12)

    def test_stretched_bgf(self):
        x = x_series(QY, 8)
        y = generator_series(QY, "y", 8)
        G = 1 / (1 - x - y * x * x)
        assert rows_of(build_from_bgf(G, 6)) == kv.A011973_TRIANGLE

    def test_constant_bgf(self):
        G = from_coeffs(QY, [1])
        assert rows_of(build_from_bgf(G, 1)) == [[1]]

    def test_degree_overflow_rejected(self):
        # [x^1] has y-degree 2: not lower-triangular
        G = from_coeffs(QY, [QY.one(), QY.poly([0, 0, 1])])
        with pytest.raises(ValueError):
            build_from_bgf(G, 2)


class TestInversion:
    def test_fibonacci_inversion(self):
        T = build_ordinary(pair_fib(8), 6)
        assert rows_of(invert_triangle(T)) == kv.DUAL_FIB_TRIANGLE

    def test_x_plus_x2_inversion(self):
        T = build_ordinary(pair_x_plus_x2(8), 6)
        assert rows_of(invert_triangle(T)) == kv.TILDE_TRIANGLE

    def test_stretched_inversion(self):
        T = build_ordinary(pair_a011973(8), 6)
        assert rows_of(invert_triangle(T)) == kv.TILDETILDE_TRIANGLE

    def test_cf_coefficient_inversion(self):
        assert rows_of(invert_triangle(cf_coeff_triangle(6))) == kv.CF_COEFF_INVERSION

    def test_cf_matrix_inversion(self):
        assert rows_of(invert_triangle(cf_matrix(Fraction(1), 6))) == kv.CF_MATRIX_B1_INVERSION

    @pytest.mark.parametrize(
        "pair_fn", [pair_fib, pair_x_plus_x2, pair_a111959], ids=["fib", "x+x^2", "central"]
    )
    def test_involution_at_16_rows(self, pair_fn):
        T = build_ordinary(pair_fn(17), 16)
        assert invert_triangle(invert_triangle(T)) == T

    def test_bell_duality(self):
        T = build_ordinary(pair_fib(13), 12)
        assert invert_triangle(T) == build_exponential(pair_exp_j1(12), 12)

    def test_central_duality(self):
        T = build_ordinary(pair_a111959(13), 12)
        assert invert_triangle(T) == build_exponential(pair_exp_j0(12), 12)

    def test_head_must_be_unit(self):
        T = Triangle(QQ, [[2], [0, 1]])
        with pytest.raises(ValueError):
            invert_triangle(T)

    def test_non_rational_triangle_rejected(self):
        T = Triangle(QY, [[QY.one()]])
        with pytest.raises(TypeError):
            invert_triangle(T)


class TestApplySeries:
    def test_central_reciprocal(self):
        x = x_series(QQ, 8)
        out = apply_series(pair_a111959(8), 1 / (1 - x))
        assert [int(c) for c in out.coeffs[:6]] == [1, 1, 3, 5, 13, 25]

    def test_identity_pair(self):
        x = x_series(QQ, 8)
        f = 1 / (1 - 3 * x)
        assert apply_series(identity_pair(8), f) == f

    def test_fibonacci_numbers(self):
        x = x_series(QQ, 10)
        out = apply_series(pair_fib(10), 1 / (1 - x))
        # oracle: c_n = c_{n-1} + c_{n-2}
        expected = [1, 1]
        while len(expected) < 10:
            expected.append(expected[-1] + expected[-2])
        assert [int(c) for c in out.coeffs] == expected

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=8),
        st.lists(st.integers(-5, 5), min_size=1, max_size=8),
    )
    def test_linearity(self, fc, gc):
        order = 10
        R = pair_fib(order)
        f = from_coeffs(QQ, fc, order)
        g = from_coeffs(QQ, gc, order)
        assert apply_series(R, f + g) == apply_series(R, f) + apply_series(R, g)

    def test_row_sum_identity_three_points(self):
        order = 16
        for a0, b0 in ((1, 1), (1, 2), (2, 1)):
            T = build_ordinary(pair_central(a0, b0, order), order)
            x = x_series(QQ, order)
            direct = 1 / ((1 - 4 * b0 * x * x).sqrt() - a0 * x)
            assert row_sums(T) == list(direct.coeffs)


class TestRowOps:
    def test_row_sums_cf_b1(self):
        sums = row_sums(cf_matrix(Fraction(1), 6))
        assert sums == [1, 1, 4, 15, 70, 336]
        assert sums == [catalan(n) * fibonacci(n + 1) for n in range(6)]

    def test_row_sums_cf_b2(self):
        # frozen by summing the six printed rows of the b=2 matrix by hand
        sums = row_sums(cf_matrix(Fraction(2), 6))
        assert sums == [1, 1, 6, 25, 154, 882]
        assert sums == [catalan(n) * jacobsthal(n + 1) for n in range(6)]

    def test_row_sums_identity_triangle(self):
        T = build_ordinary(identity_pair(8), 6)
        assert row_sums(T) == [1] * 6

    def test_eval_rows_inverted_cf_at_1(self):
        T = invert_triangle(cf_coeff_triangle(9))
        assert eval_rows(T, 1) == [1, -1, -2, 0, -2, 0, -4, 0, -10]

    def test_eval_rows_inverted_cf_at_minus_1(self):
        T = invert_triangle(cf_coeff_triangle(9))
        assert eval_rows(T, -1) == [1, -1, 2, 0, -2, 0, 4, 0, -10]

    def test_eval_rows_at_zero_gives_first_column(self):
        T = build_ordinary(pair_fib(8), 6)
        assert eval_rows(T, 0) == [row[0] for row in T.rows]


class TestTriangleType:
    def test_row_length_enforced(self):
        with pytest.raises(ValueError):
            Triangle(QQ, [[1], [2]])

    def test_mixed_ring_entries_rejected(self):
        with pytest.raises(TypeError):
            Triangle(QQ, [[QY.one()]])

    def test_csv_rendering(self):
        T = Triangle(QQ, [[1], [Fraction(1, 2), -3]])
        assert T.to_csv() == "1\n1/2,-3"

    def test_json_rendering(self):
        T = Triangle(QQ, [[1], [Fraction(1, 2), -3]])
        assert json.loads(T.to_json()) == [["1"], ["1/2", "-3"]]

    def test_big_integer_rendering_is_exact(self):
        big = 10 ** 40 + 1
        T = Triangle(QQ, [[big]])
        assert T.to_csv() == str(big)

    def test_immutable(self):
        T = Triangle(QQ, [[1]])
        with pytest.raises(AttributeError):
            T.rows = ()


class TestRiordanPair:
    def test_validation(self):
        x = x_series(QQ, 6)
        with pytest.raises(ValueError):
            RiordanPair(x, x)  # d(0) == 0
        with pytest.raises(ValueError):
            RiordanPair(1 + x, 1 + x)  # h(0) != 0
        with pytest.raises(ValueError):
            RiordanPair(1 + x, x * x)  # ordinary needs h'(0) != 0
        RiordanPair(1 + x, x * x, kind="stretched")  # fine
        with pytest.raises(ValueError):
            RiordanPair(1 + x, 0 * x, kind="stretched")  # h identically zero

    def test_mixed_rings_rejected(self):
        with pytest.raises(TypeError):
            RiordanPair(from_coeffs(QQ, [1, 0]), x_series(QY, 2))
