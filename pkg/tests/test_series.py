from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airpockets.series import (
    NonUnitError,
    NotDivisibleError,
    SeriesError,
    TruncatedSeries,
    make_poly,
)


def coeffs_int(s):
    return [int(c) for c in s.coeffs]


class TestConstruction:
    def test_constant_padded(self):
        s = make_poly([1], 3)
        assert coeffs_int(s) == [1, 0, 0, 0]
        assert s.order == 3

    def test_dap_radicand_padded(self):
        s = make_poly([1, -2, -1, -2, 1], 8)
        assert coeffs_int(s) == [1, -2, -1, -2, 1, 0, 0, 0, 0]

    def test_empty_is_zero(self):
        assert make_poly([], 0).is_zero()

    def test_too_many_coeffs(self):
        with pytest.raises(SeriesError):
            make_poly([1, 2, 3], 1)

    def test_negative_order(self):
        with pytest.raises(SeriesError):
            make_poly([1], -1)

    def test_coeff_beyond_order(self):
        s = make_poly([1, 3], 1)
        assert s.coeff(1) == 3
        with pytest.raises(SeriesError):
            s.coeff(2)


class TestArithmetic:
    def test_add(self):
        a = make_poly([1, 1], 4)
        b = make_poly([0, 0, 1], 4)
        assert coeffs_int(a + b) == [1, 1, 1, 0, 0]

    def test_add_negate_is_zero(self):
        a = make_poly([3, -2, 7], 5)
        assert (a + (-a)).is_zero()

    def test_min_order_rule(self):
        a = make_poly([1], 10)
        b = make_poly([1], 4)
        assert (a + b).order == 4
        assert (a * b).order == 4

    def test_scalar_ops_preserve_order(self):
        a = make_poly([1, 2], 7)
        assert (a * 3).order == 7
        assert (a + 1).order == 7
        assert coeffs_int(2 * a) == [2, 4, 0, 0, 0, 0, 0, 0]

    def test_mul(self):
        a = make_poly([1, 1], 2)
        assert coeffs_int(a * a) == [1, 2, 1]

    def test_telescoping(self):
        n = 12
        ones = TruncatedSeries.geometric(n)
        out = make_poly([1, -1], n) * ones
        assert out == TruncatedSeries.one(n)

    def test_div_geometric(self):
        out = TruncatedSeries.one(6) / make_poly([1, -1], 6)
        assert coeffs_int(out) == [1] * 7

    def test_div_self(self):
        a = make_poly([1, 5, -3, 2], 9)
        assert (a / a) == TruncatedSeries.one(9)

    def test_div_nonunit(self):
        with pytest.raises(NonUnitError):
            make_poly([1], 3) / make_poly([0, 1], 3)

    def test_pow(self):
        a = make_poly([1, 1], 5)
        assert coeffs_int(a**2) == [1, 2, 1, 0, 0, 0]
        assert (a**0) == TruncatedSeries.one(5)

    def test_pow_negative(self):
        with pytest.raises(SeriesError):
            make_poly([1], 2) ** -1


class TestShifts:
    def test_div_z_pow(self):
        s = make_poly([0, 0, 1, 0, 1], 4)
        assert coeffs_int(s.div_z_pow(2)) == [1, 0, 1]

    def test_div_z_pow_identity(self):
        s = make_poly([1, 2, 3], 4)
        assert s.div_z_pow(0) == s

    def test_div_z_pow_blocked(self):
        with pytest.raises(NotDivisibleError):
            make_poly([1, 1], 3).div_z_pow(1)

    def test_mul_z_pow(self):
        s = TruncatedSeries.one(2)
        assert coeffs_int(s.mul_z_pow(2)) == [0, 0, 1, 0, 0]
        assert s.mul_z_pow(2).order == 4

    def test_round_trip(self):
        s = make_poly([2, 0, 5], 6)
        again = s.mul_z_pow(3).div_z_pow(3)
        assert again == s and again.order == s.order


class TestSqrt:
    def test_perfect_square(self):
        assert coeffs_int(make_poly([1, 2, 1], 5).sqrt_unit()) == [1, 1, 0, 0, 0, 0]

    def test_one(self):
        assert TruncatedSeries.one(4).sqrt_unit() == TruncatedSeries.one(4)

    def test_radicand_square_compare(self):
        r = make_poly([1, -2, -1, -2, 1], 12)
        s = r.sqrt_unit()
        assert s * s == r
        # leading behavior is 1 - z - z^2 - 2z^3 - ...
        assert coeffs_int(s)[:4] == [1, -1, -1, -2]

    def test_nonunit_rejected(self):
        with pytest.raises(NonUnitError):
            make_poly([4], 3).sqrt_unit()


class TestEquality:
    def test_up_to_common_order(self):
        assert make_poly([1, 1], 1) == make_poly([1, 1, 9], 2)
        assert make_poly([1, 2], 1) != make_poly([1, 1, 9], 2)

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(make_poly([1], 1))


# --- randomized property suite ------------------------------------------

rationals = st.one_of(
    st.integers(-9, 9),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
)


@st.composite
def series_with(draw, constant=None, max_order=30):
    order = draw(st.integers(0, max_order))
    tail = draw(st.lists(rationals, max_size=order))
    head = [draw(rationals) if constant is None else constant]
    return make_poly((head + tail)[: order + 1], order)


@settings(max_examples=100, deadline=None)
@given(series_with(constant=1))
def test_sqrt_square_round_trip(a):
    sq = a * a
    root = sq.sqrt_unit()
    assert root * root == sq
    assert root == a


@settings(max_examples=100, deadline=None)
@given(series_with(), series_with(constant=1))
def test_div_mul_round_trip(a, b):
    assert (a / b) * b == a


@settings(max_examples=100, deadline=None)
@given(series_with(), series_with(), series_with())
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(series_with(), st.integers(0, 10))
def test_shift_round_trip(a, m):
    assert a.mul_z_pow(m).div_z_pow(m) == a


@settings(max_examples=100, deadline=None)
@given(series_with(), series_with(constant=1))
def test_results_are_canonical(a, b):
    for c in ((a / b) * b).coeffs:
        assert isinstance(c, Fraction)
        assert c.denominator > 0  # Fraction keeps gcd-reduced canonical form
