"""Laguerre/factorial evaluation against independent series and mpmath oracles."""

import math
import sys
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from numcoh.errors import ValidationError
from numcoh.special_fns import (
    MAX_ORDER,
    LogValue,
    assoc_laguerre,
    laguerre,
    laguerre_logvalue,
    log_assoc_laguerre_negarg,
    log_factorial,
    log_laguerre_negarg,
)


def series_laguerre(m: int, x: Fraction) -> Fraction:
    """Exact-rational series oracle: sum_n (1/n!) C(m, m-n) (-1)^n x^n."""
    total = Fraction(0)
    for n in range(m + 1):
        total += Fraction((-1) ** n * math.comb(m, m - n), math.factorial(n)) * x**n
    return total


def series_assoc_laguerre(m: int, k: int, x: Fraction) -> Fraction:
    """Exact-rational series oracle: sum_n (m+k)!/((m-n)! n! (k+n)!) (-x)^n."""
    total = Fraction(0)
    for n in range(m + 1):
        coeff = Fraction(
            math.factorial(m + k),
            math.factorial(m - n) * math.factorial(n) * math.factorial(k + n),
        )
        total += coeff * (-x) ** n
    return total


class TestLaguerre:
    def test_value_at_zero_is_one(self):
        assert laguerre(5, 0.0) == 1.0

    @pytest.mark.parametrize("x", [-1.0, 0.0, 2.0])
    def test_order_one_is_linear(self, x):
        assert laguerre(1, x) == pytest.approx(1.0 - x, abs=1e-15)

    def test_order_two_at_minus_one(self):
        # series oracle: 1 + 2 + 1/2 = 3.5
        assert series_laguerre(2, Fraction(-1)) == Fraction(7, 2)
        assert laguerre(2, -1.0) == pytest.approx(3.5, rel=1e-14)

    @pytest.mark.parametrize("m", [0, 1, 3, 7, 12])
    @pytest.mark.parametrize("x", [-9, -2, -1, 0, 1, 4])
    def test_matches_exact_series(self, m, x):
        expected = float(series_laguerre(m, Fraction(x)))
        assert laguerre(m, float(x)) == pytest.approx(expected, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("m,x", [(40, 17.0), (100, 50.0), (60, -33.0)])
    def test_matches_mpmath_high_precision(self, m, x):
        with mpmath.workdps(60):
            expected = float(mpmath.laguerre(m, 0, x))
        assert laguerre(m, x) == pytest.approx(expected, rel=1e-9)

    def test_nonneg_arg_lower_bound(self):
        for m in (1, 10, 100):
            for s in (0.0, 0.5, 20.0):
                assert laguerre(m, -s) >= 1.0

    def test_recurrence_consistency(self):
        xs = np.concatenate([np.linspace(-50, 50, 21), [-0.3, 0.7]])
        for m in range(1, 101, 7):
            for x in xs:
                lm1, lm, lp1 = laguerre(m - 1, x), laguerre(m, x), laguerre(m + 1, x)
                lhs = (m + 1) * lp1
                rhs = (2 * m + 1 - x) * lm - m * lm1
                assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs), 1.0)

    def test_order_cap(self):
        with pytest.raises(ValidationError):
            laguerre(MAX_ORDER + 1, 0.0)
        with pytest.raises(ValidationError):
            laguerre(-1, 0.0)


class TestAssocLaguerre:
    def test_k_zero_reduction(self):
        assert assoc_laguerre(3, 0, -2.0) == pytest.approx(laguerre(3, -2.0), rel=1e-14)

    def test_order_zero_is_one(self):
        assert assoc_laguerre(0, 2, 5.0) == 1.0

    def test_m2_k1_at_minus_one(self):
        # series oracle: 3 + 3 + 1/2 = 6.5
        assert series_assoc_laguerre(2, 1, Fraction(-1)) == Fraction(13, 2)
        assert assoc_laguerre(2, 1, -1.0) == pytest.approx(6.5, rel=1e-14)

    @pytest.mark.parametrize("m", [0, 1, 2, 5, 9])
    @pytest.mark.parametrize("k", [0, 1, 2, 4])
    @pytest.mark.parametrize("x", [-6, -1, 0, 2])
    def test_matches_exact_series(self, m, k, x):
        expected = float(series_assoc_laguerre(m, k, Fraction(x)))
        assert assoc_laguerre(m, k, float(x)) == pytest.approx(expected, rel=1e-11, abs=1e-11)

    def test_rejects_negative_k(self):
        with pytest.raises(ValidationError):
            assoc_laguerre(2, -1, 0.0)


class TestLogFactorial:
    @pytest.mark.parametrize("n,expected", [(0, 0.0), (1, 0.0)])
    def test_trivial(self, n, expected):
        assert log_factorial(n) == expected

    def test_ten(self):
        assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-15)

    def test_relative_error_up_to_2000(self):
        for n in (2, 25, 170, 517, 2000):
            exact = math.factorial(n)
            with mpmath.workdps(50):
                expected = float(mpmath.log(exact))
            assert abs(log_factorial(n) - expected) <= 1e-12 * max(expected, 1.0)


class TestLogLaguerreNegarg:
    def test_order_zero(self):
        lv = log_laguerre_negarg(0, 123.0)
        assert lv.log_magnitude == 0.0 and lv.sign == 1

    def test_matches_linear_value(self):
        lv = log_laguerre_negarg(2, 1.0)
        assert lv.to_float() == pytest.approx(3.5, rel=1e-12)

    def test_large_order_stays_finite_where_plain_value_overflows(self):
        lv = log_laguerre_negarg(200, 999.0)
        assert math.isfinite(lv.log_magnitude) and lv.sign == 1
        # the normalization quantity M! L_M(-l^2) exceeds the double range
        assert log_factorial(200) + lv.log_magnitude > math.log(sys.float_info.max)

    @pytest.mark.parametrize("m,s", [(50, 10.0), (100, 0.3), (200, 999.0)])
    def test_matches_mpmath(self, m, s):
        with mpmath.workdps(60):
            expected = float(mpmath.log(mpmath.laguerre(m, 0, -s)))
        assert log_laguerre_negarg(m, s).log_magnitude == pytest.approx(expected, rel=1e-12)

    def test_exp_consistency_where_no_overflow(self):
        for m in (0, 3, 17, 80):
            for s in (0.0, 0.4, 5.0, 60.0):
                linear = laguerre(m, -s)
                assert log_laguerre_negarg(m, s).to_float() == pytest.approx(linear, rel=1e-10)


class TestLogAssocNegarg:
    @pytest.mark.parametrize("m,k,s", [(5, 1, 2.0), (9, 2, 0.5), (1, 3, 7.0), (0, 2, 3.0)])
    def test_matches_series(self, m, k, s):
        expected = float(series_assoc_laguerre(m, k, Fraction(-s).limit_denominator(10**12)))
        assert log_assoc_laguerre_negarg(m, k, s).to_float() == pytest.approx(expected, rel=1e-11)


class TestLogValue:
    def test_zero_round_trip(self):
        zero = LogValue.from_float(0.0)
        assert zero.sign == 0 and zero.to_float() == 0.0

    def test_multiplication_never_reads_zero_magnitude(self):
        zero = LogValue(float("nan"), 0)
        product = zero * LogValue.from_float(3.0)
        assert product.sign == 0 and product.to_float() == 0.0

    def test_signed_arithmetic(self):
        a = LogValue.from_float(-2.0)
        b = LogValue.from_float(8.0)
        assert (a * b).to_float() == pytest.approx(-16.0, rel=1e-14)
        assert (a / b).to_float() == pytest.approx(-0.25, rel=1e-14)

    def test_positive_recurrence_scaling(self):
        # order large enough that intermediate values overflow without rescaling
        lv = laguerre_logvalue(1500, 2.0)
        assert math.isfinite(lv.log_magnitude)
