"""Exact arithmetic on truncated integer series: the documented examples."""

import pytest

from paritybias.series import (
    FormalSeries,
    MonomialParam,
    add,
    coefficient,
    div_binomial,
    make,
    mul,
    one,
    poch_finite,
    poch_infinite,
    q_power,
    reciprocal,
    scale,
    shift,
    sub,
    times_binomial,
    truncate,
    zero,
)


def coeffs(series):
    return list(series.coeffs)


class TestMake:
    def test_constant_padded(self):
        assert coeffs(make([1], 3)) == [1, 0, 0, 0]

    def test_single_q(self):
        assert coeffs(make([0, 1], 2)) == [0, 1, 0]

    def test_one_minus_q(self):
        assert coeffs(make([1, -1], 1)) == [1, -1]

    def test_too_many_coeffs(self):
        with pytest.raises(ValueError):
            make([1, 2, 3], 1)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            make([1], -1)


class TestAddSubScale:
    def test_add_cancels(self):
        assert coeffs(add(make([1, -1], 1), make([0, 1], 1))) == [1, 0]

    def test_sub_to_zero(self):
        assert coeffs(sub(one(2), one(2))) == [0, 0, 0]

    def test_scale(self):
        assert coeffs(scale(make([1, 1], 1), 3)) == [3, 3]

    def test_mixed_order_truncates_to_min(self):
        out = add(make([1, 1, 1], 2), make([1], 5))
        assert out.order == 2
        assert coeffs(out) == [2, 1, 1]


class TestMul:
    def test_difference_of_squares(self):
        out = mul(make([1, 1], 2), make([1, -1], 2))
        assert coeffs(out) == [1, 0, -1]

    def test_telescoping_truncated(self):
        out = mul(make([1, -1], 3), make([1, 1, 1, 1], 3))
        assert coeffs(out) == [1, 0, 0, 0]

    def test_product_above_order_vanishes(self):
        out = mul(make([0, 1], 1), make([0, 1], 1))
        assert coeffs(out) == [0, 0]

    def test_big_coefficients_exact(self):
        # squaring 1/(1-q) twice: binomial C(n+3, 3) coefficients
        geo = reciprocal(make([1, -1], 30))
        fourth = mul(mul(geo, geo), mul(geo, geo))
        n = 30
        assert coefficient(fourth, n) == (n + 1) * (n + 2) * (n + 3) // 6


class TestShift:
    def test_shift_constant(self):
        assert coeffs(shift(one(3), 2)) == [0, 0, 1, 0]

    def test_shift_zero_is_identity(self):
        s = make([1, 1], 1)
        assert coeffs(shift(s, 0)) == [1, 1]

    def test_shift_past_order(self):
        assert coeffs(shift(one(3), 5)) == [0, 0, 0, 0]


class TestReciprocal:
    def test_geometric(self):
        assert coeffs(reciprocal(make([1, -1], 3))) == [1, 1, 1, 1]

    def test_one_over_one(self):
        assert coeffs(reciprocal(one(2))) == [1, 0, 0]

    def test_zero_constant_term_rejected(self):
        with pytest.raises(ValueError, match="non-invertible series"):
            reciprocal(make([0, 1, 1], 2))

    def test_non_unit_constant_rejected(self):
        with pytest.raises(ValueError, match="non-invertible series"):
            reciprocal(make([2], 2))

    def test_negative_unit(self):
        out = reciprocal(make([-1, 1], 3))
        assert coeffs(mul(out, make([-1, 1], 3))) == [1, 0, 0, 0]


class TestPochhammer:
    def test_q_q_2(self):
        # (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
        out = poch_finite(q_power(1), 1, 2, 3)
        assert coeffs(out) == [1, -1, -1, 1]

    def test_empty_product(self):
        out = poch_finite(MonomialParam(-1, 4), 3, 0, 5)
        assert coeffs(out) == [1, 0, 0, 0, 0, 0]

    def test_single_even_factor(self):
        out = poch_finite(q_power(2), 2, 1, 4)
        assert coeffs(out) == [1, 0, -1, 0, 0]

    def test_infinite_pentagonal_prefix(self):
        out = poch_infinite(q_power(1), 1, 5)
        assert coeffs(out) == [1, -1, -1, 0, 0, 1]

    def test_infinite_early_cutoff(self):
        out = poch_infinite(q_power(2), 2, 3)
        assert coeffs(out) == [1, 0, -1, 0]

    def test_infinite_zero_param(self):
        out = poch_infinite(MonomialParam(0, 0), 1, 3)
        assert coeffs(out) == [1, 0, 0, 0]

    def test_divergent_rejected(self):
        with pytest.raises(ValueError, match="divergent product"):
            poch_infinite(MonomialParam(1, 0), 1, 5)

    def test_finite_recurrence(self):
        # (a; q^s)_(n+1) = (a; q^s)_n * (1 - a q^(s n))
        a, s, order = q_power(2), 2, 24
        for n in range(5):
            left = poch_finite(a, s, n + 1, order)
            right = times_binomial(poch_finite(a, s, n, order), -1, 2 + s * n)
            assert left == right


class TestCoefficient:
    def test_values(self):
        s = make([1, -1], 1)
        assert coefficient(s, 0) == 1
        assert coefficient(s, 1) == -1

    def test_beyond_truncation(self):
        with pytest.raises(ValueError, match="beyond truncation"):
            coefficient(make([1, -1], 1), 5)


class TestBinomialOps:
    def test_times_binomial_matches_mul(self):
        s = reciprocal(poch_finite(q_power(1), 1, 3, 20))
        binom = make([1] + [0] * 4 + [-1], 20)
        assert times_binomial(s, -1, 5) == mul(s, binom)

    def test_div_binomial_inverts(self):
        s = poch_infinite(q_power(1), 1, 20)
        assert div_binomial(times_binomial(s, 1, 3), 1, 3) == s

    def test_div_binomial_geometric(self):
        assert coeffs(div_binomial(one(6), -1, 2)) == [1, 0, 1, 0, 1, 0, 1]


class TestMonomialParam:
    def test_zero_taken_as_exponent_zero(self):
        assert MonomialParam(0, 0).exponent == 0

    def test_zero_with_exponent_rejected(self):
        with pytest.raises(ValueError):
            MonomialParam(0, 3)

    def test_coefficient_range(self):
        with pytest.raises(ValueError):
            MonomialParam(2, 1)

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            MonomialParam(1, -1)


class TestTruncate:
    def test_truncation_monotone(self):
        a = reciprocal(poch_infinite(q_power(2), 2, 40))
        b = reciprocal(poch_infinite(q_power(2), 2, 25))
        assert truncate(a, 25) == b

    def test_truncate_up_rejected(self):
        with pytest.raises(ValueError):
            truncate(one(3), 10)


class TestValueSemantics:
    def test_equality_and_hash(self):
        assert make([1, 2], 4) == make([1, 2, 0], 4)
        assert hash(make([1, 2], 4)) == hash(make([1, 2, 0], 4))
        assert make([1, 2], 4) != make([1, 2], 5)

    def test_zero_series(self):
        assert coeffs(zero(2)) == [0, 0, 0]

    def test_frozen(self):
        s = one(2)
        with pytest.raises(AttributeError):
            s.order = 5

    def test_coeffs_length_invariant(self):
        s = make([5], 7)
        assert isinstance(s, FormalSeries)
        assert len(s.coeffs) == s.order + 1
