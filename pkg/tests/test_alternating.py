"""
Unit tests for the alternating Eulerian polynomials and their routes.
"""

import sys
import unittest
from math import factorial
from pathlib import Path

src_path = str(Path(__file__).parent.parent / 'src')
sys.path.insert(0, src_path)

from algebra.polyring import IntPoly, reciprocal_transform  # noqa: E402
from combinatorics.permutations import BoundaryConvention, Permutation, euler_number, iter_permutations  # noqa: E402
from combinatorics.signed import du_b_number, snake_number  # noqa: E402
from config import Settings, configure  # noqa: E402
from exceptions import DegreeOverflowError, EnumerationBoundError  # noqa: E402
from polynomials.alternating import (  # noqa: E402
    ONE_PLUS_X2,
    Route,
    a_hat_bruteforce,
    a_hat_combinatorial,
    a_hat_via_p,
    b_hat_bruteforce,
    b_hat_combinatorial,
    b_hat_diff_recurrence,
    b_hat_minus,
    b_hat_minus_via_descent_sets,
    b_hat_plus,
    b_hat_plus_via_descent_sets,
    b_hat_recurrence_rows,
    b_hat_via_descent_sets,
    b_hat_via_q,
    clear_caches,
    compute,
    doubled_valley_sum,
    evaluation_anchors,
    orbit_polynomial,
    peak_valley_weight,
    signed_alternating_counts,
    unsigned_start_bruteforce,
)
from polynomials.derivative import DerivativePolynomialTable, install_table, p_poly  # noqa: E402


class AlternatingTestCase(unittest.TestCase):
    """Default settings, fresh tables and empty caches for every test."""

    def setUp(self):
        self.previous_settings = configure(Settings())
        self.previous_table = install_table()
        clear_caches()

    def tearDown(self):
        configure(self.previous_settings)
        install_table(self.previous_table)
        clear_caches()


class TestTypeA(AlternatingTestCase):
    """Test A_n by enumeration, by weights and from P_n."""

    def test_small_values(self):
        self.assertEqual(a_hat_bruteforce(1), IntPoly((1,)))
        self.assertEqual(a_hat_bruteforce(2), IntPoly((1, 1)))
        self.assertEqual(a_hat_bruteforce(3), IntPoly((2, 2, 2)))

    def test_routes_agree(self):
        for n in range(1, 8):
            expected = a_hat_bruteforce(n)
            self.assertEqual(a_hat_combinatorial(n), expected, msg=f"n={n}")
            self.assertEqual(a_hat_via_p(n), expected, msg=f"n={n}")

    def test_anchors_beyond_enumeration(self):
        for n in (12, 20):
            poly = a_hat_via_p(n)
            self.assertEqual(poly.evaluate(1), factorial(n))
            self.assertEqual(poly.coefficient(0), euler_number(n))
            self.assertLessEqual(poly.degree, n - 1)

    def test_doubled_valley_sum(self):
        for n in range(1, 7):
            self.assertEqual(doubled_valley_sum(n, BoundaryConvention.CLOSED_HIGH),
                             ONE_PLUS_X2 * a_hat_bruteforce(n).scale(2 ** n))

    def test_enumeration_bound(self):
        with self.assertRaises(EnumerationBoundError):
            a_hat_bruteforce(9)
        with self.assertRaises(EnumerationBoundError):
            a_hat_combinatorial(4, bound=3)
        with self.assertRaises(ValueError):
            a_hat_via_p(0)

    def test_peak_valley_weight(self):
        self.assertEqual(peak_valley_weight(0, 0, 0), IntPoly((1,)))
        self.assertEqual(peak_valley_weight(1, 1, 1), IntPoly((2, 2, 2, 2)))


class TestTypeB(AlternatingTestCase):
    """Test B_n and its halves by every route."""

    def test_small_values(self):
        self.assertEqual(b_hat_bruteforce(0), IntPoly((1,)))
        self.assertEqual(b_hat_bruteforce(1), IntPoly((1, 1)))
        self.assertEqual(b_hat_bruteforce(2), IntPoly((3, 2, 3)))
        self.assertEqual(b_hat_minus(2), IntPoly((3, 1)))
        self.assertEqual(b_hat_plus(2), IntPoly((0, 1, 3)))
        self.assertEqual(b_hat_bruteforce(3), IntPoly((11, 13, 13, 11)))

    def test_routes_agree(self):
        for n in range(1, 7):
            expected = b_hat_bruteforce(n)
            self.assertEqual(b_hat_combinatorial(n), expected, msg=f"comb n={n}")
            self.assertEqual(b_hat_via_q(n), expected, msg=f"deriv n={n}")
            self.assertEqual(IntPoly(b_hat_recurrence_rows(n)[n]), expected, msg=f"rec n={n}")
            self.assertEqual(b_hat_diff_recurrence(n), expected, msg=f"diff n={n}")
            self.assertEqual(b_hat_via_descent_sets(n), expected, msg=f"sets n={n}")

    def test_halves_by_descent_sets(self):
        for n in range(1, 7):
            self.assertEqual(b_hat_minus_via_descent_sets(n), b_hat_minus(n))
            self.assertEqual(b_hat_plus_via_descent_sets(n), b_hat_plus(n))

    def test_recurrence_rows(self):
        rows = b_hat_recurrence_rows(3)
        self.assertEqual(rows[1], (1, 1))
        self.assertEqual(rows[2], (3, 2, 3))
        self.assertEqual(rows[3], (11, 13, 13, 11))
        with self.assertRaises(ValueError):
            b_hat_recurrence_rows(0)
        with self.assertRaises(ValueError):
            b_hat_diff_recurrence(0)

    def test_palindromic_with_snake_ends(self):
        for n in range(1, 13):
            poly = b_hat_via_q(n)
            self.assertEqual(reciprocal_transform(poly, n), poly)
            self.assertEqual(poly.coefficient(0), snake_number(n))
            self.assertEqual(poly.evaluate(1), 2 ** n * factorial(n))

    def test_unsigned_start_and_alternating_counts(self):
        for n in range(1, 6):
            self.assertEqual(unsigned_start_bruteforce(n), a_hat_bruteforce(n).scale(2 ** n))
            self.assertEqual(signed_alternating_counts(n), (du_b_number(n), snake_number(n)))

    def test_doubled_valley_sum_is_b_n(self):
        for n in range(1, 6):
            self.assertEqual(doubled_valley_sum(n, BoundaryConvention.ZERO_HIGH), b_hat_bruteforce(n))

    def test_enumeration_bound(self):
        with self.assertRaises(EnumerationBoundError):
            b_hat_bruteforce(8)
        with self.assertRaises(EnumerationBoundError):
            b_hat_minus(3, bound=2)

    def test_configured_bound(self):
        configure(Settings().with_bounds(type_b=2))
        with self.assertRaises(EnumerationBoundError):
            b_hat_bruteforce(3)

    def test_derivative_entry_above_degree_window(self):
        table = DerivativePolynomialTable()
        table.inject("Q", 3, IntPoly((0, 5, 0, 6, 0, 1)))
        table.inject("P", 3, IntPoly((2, 0, 8, 0, 6, 1)))
        install_table(table)
        with self.assertRaises(DegreeOverflowError) as raised:
            b_hat_via_q(3)
        self.assertEqual(raised.exception.n, 3)
        with self.assertRaises(DegreeOverflowError) as raised:
            a_hat_via_p(3)
        self.assertEqual(raised.exception.n, 3)


class TestOrbitPolynomials(AlternatingTestCase):
    """Test the per-permutation orbit identity."""

    def test_identity_permutation(self):
        result = orbit_polynomial(Permutation((1, 2, 3)))
        self.assertTrue(result.agrees)
        self.assertEqual(result.left.evaluate(1), 8)

    def test_every_permutation_up_to_five(self):
        for n in range(1, 6):
            for p in iter_permutations(n):
                result = orbit_polynomial(p)
                self.assertTrue(result.agrees, msg=f"{p}: {result.left} vs {result.right}")

    def test_empty_permutation(self):
        with self.assertRaises(ValueError):
            orbit_polynomial(Permutation(()))


class TestDispatch(AlternatingTestCase):
    """Test route selection."""

    def test_auto_routes(self):
        self.assertEqual(compute("A", 3), IntPoly((2, 2, 2)))
        self.assertEqual(compute("B", 2), IntPoly((3, 2, 3)))
        self.assertEqual(compute("B", 0), IntPoly((1,)))
        self.assertEqual(compute("Bminus", 2), IntPoly((3, 1)))
        self.assertEqual(compute("Bplus", 2), IntPoly((0, 1, 3)))
        self.assertEqual(compute("P", 3), p_poly(3))
        self.assertEqual(compute("Q", 3), IntPoly((0, 5, 0, 6)))

    def test_explicit_routes(self):
        for route in (Route.BRUTE, Route.COMB, Route.DERIV, Route.REC, Route.SETS):
            self.assertEqual(compute("B", 4, route), b_hat_bruteforce(4), msg=route.value)
        self.assertEqual(compute("B", 0, Route.REC), IntPoly((1,)))
        self.assertEqual(compute("P", 4, Route.COMB), p_poly(4))

    def test_rejections(self):
        with self.assertRaises(ValueError):
            compute("Z", 3)
        with self.assertRaises(ValueError):
            compute("A", 3, Route.REC)
        with self.assertRaises(ValueError):
            compute("Bminus", 3, Route.DERIV)
        with self.assertRaisesRegex(ValueError, r"B_n\^\+"):
            compute("Bplus", 0)
        with self.assertRaises(EnumerationBoundError):
            compute("A", 9, Route.BRUTE)

    def test_evaluation_anchors(self):
        self.assertEqual(evaluation_anchors(3), (6, 48))


if __name__ == '__main__':
    unittest.main()
