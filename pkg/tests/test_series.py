"""
Unit tests for truncated exponential generating function arithmetic.
"""

import sys
import unittest
from fractions import Fraction
from math import factorial
from pathlib import Path

src_path = str(Path(__file__).parent.parent / 'src')
sys.path.insert(0, src_path)

from algebra.polyring import IntPoly  # noqa: E402
from algebra.series import (  # noqa: E402
    RatPoly,
    SeriesQx,
    egf_from_family,
    scale_z,
    series_add,
    series_div,
    series_equal,
    series_mul,
    trig_series,
)
from combinatorics.permutations import euler_number  # noqa: E402
from combinatorics.signed import snake_number  # noqa: E402
from exceptions import SeriesInversionError, SeriesOrderMismatchError  # noqa: E402


def scalars(series: SeriesQx):
    return [series.coefficient(n).coefficient(0) for n in range(series.order + 1)]


class TestRatPoly(unittest.TestCase):
    """Test the rational polynomial coefficient ring."""

    def test_reduced_fractions(self):
        p = RatPoly((Fraction(2, 4), 0, 0))
        self.assertEqual(p.coeffs, (Fraction(1, 2),))

    def test_truncated_inverse(self):
        one_minus_x = RatPoly((1, -1))
        inverse = one_minus_x.inverse(5)
        self.assertEqual(inverse.coeffs, (1, 1, 1, 1, 1, 1))
        self.assertEqual(one_minus_x.mul(inverse, 5), RatPoly.constant(1))

    def test_inverse_needs_constant_term(self):
        with self.assertRaises(SeriesInversionError):
            RatPoly.x().inverse(3)


class TestSeriesArithmetic(unittest.TestCase):
    """Test the truncated ring operations."""

    def test_geometric_series(self):
        one = SeriesQx.constant(1, 3, 5)
        one_minus_z = SeriesQx.from_scalars([1, -1], 3, 5)
        self.assertEqual(scalars(series_div(one, one_minus_z)), [1, 1, 1, 1])

    def test_cos_times_sec(self):
        for order in (0, 4, 9):
            product = series_mul(trig_series("cos", order), trig_series("sec", order))
            self.assertTrue(series_equal(product, SeriesQx.constant(1, order, order + 2)))

    def test_trig_coefficients(self):
        self.assertEqual(scalars(trig_series("cos", 4)), [1, 0, Fraction(-1, 2), 0, Fraction(1, 24)])
        self.assertEqual(scalars(trig_series("tan", 5)), [0, 1, 0, Fraction(1, 3), 0, Fraction(2, 15)])
        self.assertEqual(scalars(trig_series("sec", 4)), [1, 0, Fraction(1, 2), 0, Fraction(5, 24)])
        self.assertEqual(trig_series("tan", 7).coefficient(7).coefficient(0), Fraction(272, 5040))

    def test_unknown_trig_name(self):
        with self.assertRaises(ValueError):
            trig_series("cot", 3)

    def test_division_by_polynomial_constant(self):
        """1/(1 - x - z): the z^0 coefficient 1 - x is inverted modulo x^(x_order+1)."""
        denominator = SeriesQx(3, 6, (RatPoly((1, -1)), RatPoly.constant(-1)))
        quotient = series_div(SeriesQx.constant(1, 3, 6), denominator)
        self.assertTrue(series_equal(series_mul(quotient, denominator), SeriesQx.constant(1, 3, 6)))

    def test_division_by_non_invertible(self):
        with self.assertRaises(SeriesInversionError):
            series_div(SeriesQx.constant(1, 3, 5), SeriesQx.z(3, 5))

    def test_order_mismatch(self):
        with self.assertRaises(SeriesOrderMismatchError):
            series_add(SeriesQx.constant(1, 3, 5), SeriesQx.constant(1, 4, 6))
        with self.assertRaises(SeriesOrderMismatchError):
            series_equal(SeriesQx.constant(1, 3, 5), SeriesQx.constant(1, 4, 6))


class TestSubstitution(unittest.TestCase):
    """Test z -> c z."""

    def test_identity_scaling(self):
        cos = trig_series("cos", 6)
        self.assertTrue(series_equal(scale_z(cos, RatPoly.constant(1)), cos))

    def test_scale_z_of_z(self):
        scaled = scale_z(SeriesQx.z(4, 6), RatPoly((1, -1)))
        self.assertEqual(scaled.coefficient(1), RatPoly((1, -1)))
        self.assertTrue(scaled.coefficient(2).is_zero())

    def test_cos_is_even(self):
        cos = trig_series("cos", 8)
        self.assertTrue(series_equal(scale_z(cos, RatPoly((-1, 1))), scale_z(cos, RatPoly((1, -1)))))


class TestFamilies(unittest.TestCase):
    """Test generating functions assembled from families."""

    def test_exponential(self):
        series = egf_from_family(lambda n: IntPoly.constant(1), 3)
        self.assertEqual(scalars(series), [1, 1, Fraction(1, 2), Fraction(1, 6)])

    def test_start_at_one(self):
        values = {1: IntPoly((1,)), 2: IntPoly((1, 1)), 3: IntPoly((2, 2, 2))}
        series = egf_from_family(values.__getitem__, 3, start=1)
        self.assertTrue(series.coefficient(0).is_zero())
        self.assertEqual(series.coefficient(2), RatPoly((Fraction(1, 2), Fraction(1, 2))))
        self.assertEqual(series.egf_coefficient(3), IntPoly((2, 2, 2)))

    def test_invalid_start(self):
        with self.assertRaises(ValueError):
            egf_from_family(lambda n: IntPoly.constant(1), 3, start=2)

    def test_mismatch_report(self):
        left = egf_from_family(lambda n: IntPoly((1, n)), 4)
        right = egf_from_family(lambda n: IntPoly((1, n + (1 if n == 3 else 0))), 4)
        comparison = series_equal(left, right)
        self.assertFalse(comparison)
        self.assertEqual(comparison.first_mismatch, (3, 1))
        self.assertEqual(comparison.left, Fraction(3, factorial(3)))
        self.assertEqual(comparison.right, Fraction(4, factorial(3)))

    def test_euler_generating_function(self):
        family = egf_from_family(lambda n: IntPoly.constant(1 if n == 0 else euler_number(n)), 8)
        closed = trig_series("tan", 8) + trig_series("sec", 8)
        self.assertTrue(series_equal(family, closed))

    def test_snake_generating_function(self):
        family = egf_from_family(lambda n: IntPoly.constant(1 if n == 0 else snake_number(n)), 8)
        cos, sin = trig_series("cos", 8), trig_series("sin", 8)
        closed = SeriesQx.constant(1, 8, 10) / (cos - sin)
        self.assertTrue(series_equal(family, closed))


if __name__ == '__main__':
    unittest.main()
