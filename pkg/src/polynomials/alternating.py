"""
Alternating Eulerian polynomials of type A and B by every available route.

    A_n(x) = sum over S_n of x^d(sigma)            (alternating descents)
    B_n(x) = sum over B_n of x^d_B(sigma)          (word prepended by 0)

Routes: exhaustive enumeration, the peak/valley weight formula, the Moebius
substitution of the derivative polynomials, the coefficient and differential
recurrences, and the descent-set formula for B_n^-.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

from algebra.polyring import (
    IntPoly,
    exact_divide,
    exact_divide_scalar,
    mobius_hom_sub,
    reciprocal_transform,
    total,
)
from combinatorics.enumeration import alternating_descent_histogram, profile_census, signed_census
from combinatorics.permutations import BoundaryConvention, Permutation, stat_profile
from combinatorics.signed import d_hat_typeA_on_signed, orbit
from config import get_settings
from exceptions import DegreeOverflowError, EnumerationBoundError, InexactDivisionError
from polynomials import descent_sets
from polynomials.derivative import p_poly, p_via_statistics, q_poly, q_via_statistics

logger = logging.getLogger(__name__)

ONE_PLUS_X = IntPoly((1, 1))
ONE_MINUS_X = IntPoly((1, -1))
ONE_PLUS_X2 = IntPoly((1, 0, 1))


class Route(Enum):
    AUTO = "auto"
    BRUTE = "brute"
    COMB = "comb"
    DERIV = "deriv"
    REC = "rec"
    SETS = "sets"


def _bound(kind: str, bound: Optional[int]) -> int:
    if bound is not None:
        return bound
    bounds = get_settings().enumeration
    return bounds.type_a if kind == "A" else bounds.type_b


def _require(family: str, n: int, kind: str, bound: Optional[int], minimum: int = 1):
    if n < minimum:
        raise ValueError(f"{family} is defined for n >= {minimum}, got {n}")
    limit = _bound(kind, bound)
    if n > limit:
        raise EnumerationBoundError(family, n, limit)


def peak_valley_weight(dda: int, val: int, pk: int) -> IntPoly:
    """(1+x)^dda 2^val (1+x^2)^pk."""
    return (ONE_PLUS_X ** dda * ONE_PLUS_X2 ** pk).scale(2 ** val)


@lru_cache(maxsize=None)
def _census(n: int, conv: BoundaryConvention) -> Tuple[Tuple[Tuple[int, int, int], int], ...]:
    return tuple(sorted(profile_census(n, conv, get_settings().chunk_size).items()))


@lru_cache(maxsize=None)
def _signed(n: int):
    return signed_census(n, get_settings().chunk_size)


def clear_caches():
    """Forget every enumeration result (keeps verification runs hermetic)."""
    _census.cache_clear()
    _signed.cache_clear()
    descent_sets.clear_caches()


def weighted_census_sum(n: int, conv: BoundaryConvention, bound: Optional[int] = None) -> IntPoly:
    """Sum of peak_valley_weight over the profiles of S_n under ``conv``."""
    _require("peak/valley weight sum", n, "A", bound)
    return total(peak_valley_weight(*signature).scale(count) for signature, count in _census(n, conv))


def doubled_valley_sum(n: int, conv: BoundaryConvention, bound: Optional[int] = None) -> IntPoly:
    """Sum of (1+x)^dda (2+2x^2)^val over S_n under ``conv``."""
    _require("doubled valley sum", n, "A", bound)
    two_plus_2x2 = IntPoly((2, 0, 2))
    return total((ONE_PLUS_X ** dda * two_plus_2x2 ** val).scale(count)
                 for (dda, val, _pk), count in _census(n, conv))


def profile_signatures(n: int, conv: BoundaryConvention,
                       bound: Optional[int] = None) -> Dict[Tuple[int, int, int], int]:
    """(dda, val, pk) census of S_n."""
    _require("profile census", n, "A", bound, minimum=0)
    return dict(_census(n, conv))


# -- type A ---------------------------------------------------------------

def a_hat_bruteforce(n: int, bound: Optional[int] = None) -> IntPoly:
    _require("A_n by enumeration", n, "A", bound)
    return IntPoly(tuple(alternating_descent_histogram(n, get_settings().chunk_size)))


def a_hat_combinatorial(n: int, bound: Optional[int] = None) -> IntPoly:
    """2^n A_n = sum over CLOSED_HIGH profiles of (1+x)^dda 2^val (1+x^2)^pk."""
    weighted = weighted_census_sum(n, BoundaryConvention.CLOSED_HIGH, bound)
    try:
        return exact_divide_scalar(weighted, 2 ** n)
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"A_{n} weight sum not divisible by 2^{n}: {exc}", n=n)


def a_hat_via_p(n: int) -> IntPoly:
    """2^n (1+x^2) A_n = (1-x)^(n+1) P_n((1+x)/(1-x))."""
    if n < 1:
        raise ValueError(f"A_n is defined for n >= 1, got {n}")
    try:
        substituted = mobius_hom_sub(p_poly(n), n + 1)
    except DegreeOverflowError as exc:
        raise DegreeOverflowError(f"P_{n} does not fit degree n+1: {exc}", n=n)
    try:
        return exact_divide_scalar(exact_divide(substituted, ONE_PLUS_X2), 2 ** n)
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"A_{n} from P_{n}: {exc}", n=n)


# -- type B ---------------------------------------------------------------

def b_hat_split(n: int, bound: Optional[int] = None) -> Tuple[IntPoly, IntPoly]:
    """(B_n^-, B_n^+) by sweeping B_n."""
    _require("B_n by enumeration", n, "B", bound)
    census = _signed(n)
    return IntPoly(census.minus), IntPoly(census.plus)


def b_hat_bruteforce(n: int, bound: Optional[int] = None) -> IntPoly:
    if n == 0:
        return IntPoly.constant(1)
    minus, plus = b_hat_split(n, bound)
    return minus + plus


def b_hat_minus(n: int, bound: Optional[int] = None) -> IntPoly:
    return b_hat_split(n, bound)[0]


def b_hat_plus(n: int, bound: Optional[int] = None) -> IntPoly:
    return b_hat_split(n, bound)[1]


def unsigned_start_bruteforce(n: int, bound: Optional[int] = None) -> IntPoly:
    """Sum over B_n of x^d(pi), position 0 ignored."""
    _require("sum over B_n of x^d", n, "B", bound)
    return IntPoly(_signed(n).unsigned_start)


def signed_alternating_counts(n: int, bound: Optional[int] = None) -> Tuple[int, int]:
    """(down-up elements, snakes) of B_n by enumeration."""
    _require("alternating elements of B_n", n, "B", bound)
    census = _signed(n)
    return census.down_up, census.snakes


def b_hat_combinatorial(n: int, bound: Optional[int] = None) -> IntPoly:
    """B_n = sum over ZERO_HIGH profiles of (1+x)^dda 2^val (1+x^2)^pk."""
    return weighted_census_sum(n, BoundaryConvention.ZERO_HIGH, bound)


def b_hat_via_q(n: int) -> IntPoly:
    """B_n = (1-x)^n Q_n((1+x)/(1-x))."""
    if n < 0:
        raise ValueError(f"B_n is defined for n >= 0, got {n}")
    try:
        return mobius_hom_sub(q_poly(n), n)
    except DegreeOverflowError as exc:
        raise DegreeOverflowError(f"Q_{n} does not fit degree n: {exc}", n=n)


def b_hat_recurrence_rows(n_max: int) -> Dict[int, Tuple[int, ...]]:
    """
    Rows B(n, 0..n) for n = 1..n_max from

        B(n+1,k) = (n+1-k)(B(n,k) + B(n,k-2)) + k(B(n,k+1) + B(n,k-1))
                   + B(n,k+1) + B(n,k-2)

    seeded with B(1, .) = (1, 1).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = {1: (1, 1)}
    for n in range(1, n_max):
        row = rows[n]

        def b(k: int) -> int:
            return row[k] if 0 <= k <= n else 0

        rows[n + 1] = tuple(
            (n + 1 - k) * (b(k) + b(k - 2)) + k * (b(k + 1) + b(k - 1)) + b(k + 1) + b(k - 2)
            for k in range(n + 2)
        )
    return rows


def b_hat_diff_recurrence(n: int) -> IntPoly:
    """Iterate B_{m+1} = (m+1+x+m x^2) B_m + (1-x)(1+x^2) B_m' from B_1 = 1+x."""
    if n < 1:
        raise ValueError(f"the differential recurrence starts at n = 1, got {n}")
    poly = ONE_PLUS_X
    damping = ONE_MINUS_X * ONE_PLUS_X2
    for m in range(1, n):
        poly = IntPoly((m + 1, 1, m)) * poly + damping * poly.derivative()
    return poly


def b_hat_minus_via_descent_sets(n: int) -> IntPoly:
    """B_n^-(x) = sum over T of alpha_n^-(T) x^|T| (1-x)^(n-1-|T|)."""
    if n < 1:
        raise ValueError(f"B_n^- is defined for n >= 1, got {n}")
    sums = descent_sets.alpha_sums_by_size(n)
    return total((IntPoly.monomial(k) * ONE_MINUS_X ** (n - 1 - k)).scale(c) for k, c in enumerate(sums))


def b_hat_plus_via_descent_sets(n: int) -> IntPoly:
    """B_n^+(x) = x^n B_n^-(1/x), from negating every entry."""
    if n < 1:
        raise ValueError(f"B_n^+ is defined for n >= 1, got {n}")
    return reciprocal_transform(b_hat_minus_via_descent_sets(n), n)


def b_hat_via_descent_sets(n: int) -> IntPoly:
    if n == 0:
        return IntPoly.constant(1)
    minus = b_hat_minus_via_descent_sets(n)
    return minus + reciprocal_transform(minus, n)


# -- orbits ---------------------------------------------------------------

@dataclass(frozen=True)
class OrbitPolynomial:
    """Both sides of the orbit identity for one permutation."""

    permutation: Permutation
    left: IntPoly
    right: IntPoly

    @property
    def agrees(self) -> bool:
        return self.left == self.right


def orbit_polynomial(p: Permutation) -> OrbitPolynomial:
    """
    Sum over Orb(p) of x^d(pi) next to (1+x)^dda 2^val (1+x^2)^pk of p.

    The right side uses the CLOSED_HIGH profile of p.
    """
    if p.n < 1:
        raise ValueError("orbit polynomials need n >= 1")
    counts = [0] * p.n
    for signed in orbit(p):
        counts[d_hat_typeA_on_signed(signed)] += 1
    profile = stat_profile(p, BoundaryConvention.CLOSED_HIGH)
    return OrbitPolynomial(p, IntPoly(tuple(counts)), peak_valley_weight(*profile.signature()))


# -- dispatch ---------------------------------------------------------------

FAMILY_ROUTES: Dict[str, Tuple[Route, ...]] = {
    "A": (Route.BRUTE, Route.COMB, Route.DERIV),
    "B": (Route.BRUTE, Route.COMB, Route.DERIV, Route.REC, Route.SETS),
    "Bminus": (Route.BRUTE, Route.SETS),
    "Bplus": (Route.BRUTE, Route.SETS),
    "P": (Route.COMB, Route.REC),
    "Q": (Route.COMB, Route.REC),
}

AUTO_ROUTES: Dict[str, Route] = {
    "A": Route.DERIV,
    "B": Route.DERIV,
    "Bminus": Route.SETS,
    "Bplus": Route.SETS,
    "P": Route.REC,
    "Q": Route.REC,
}


def compute(family: str, n: int, route: Route = Route.AUTO) -> IntPoly:
    """
    Compute one polynomial of ``family`` by the requested route.

    Raises:
        ValueError: unknown family or a route the family does not offer.
        EnumerationBoundError: an exhaustive route beyond its bound.
        InexactDivisionError: a route's exactness assertion failed.
    """
    if family not in FAMILY_ROUTES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILY_ROUTES)}")
    if route is Route.AUTO:
        route = AUTO_ROUTES[family]
    if route not in FAMILY_ROUTES[family]:
        allowed = ", ".join(r.value for r in FAMILY_ROUTES[family])
        raise ValueError(f"route {route.value!r} is not available for {family}; choose from {allowed}")
    logger.debug(f"computing {family}_{n} by route {route.value}")

    if family == "A":
        return {
            Route.BRUTE: a_hat_bruteforce,
            Route.COMB: a_hat_combinatorial,
            Route.DERIV: a_hat_via_p,
        }[route](n)
    if family == "B":
        if route is Route.REC:
            return IntPoly.constant(1) if n == 0 else b_hat_diff_recurrence(n)
        if route is Route.COMB and n == 0:
            return IntPoly.constant(1)
        return {
            Route.BRUTE: b_hat_bruteforce,
            Route.COMB: b_hat_combinatorial,
            Route.DERIV: b_hat_via_q,
            Route.SETS: b_hat_via_descent_sets,
        }[route](n)
    if family in ("Bminus", "Bplus"):
        if route is Route.BRUTE:
            return b_hat_minus(n) if family == "Bminus" else b_hat_plus(n)
        return b_hat_minus_via_descent_sets(n) if family == "Bminus" else b_hat_plus_via_descent_sets(n)
    if route is Route.REC:
        return p_poly(n) if family == "P" else q_poly(n)
    return p_via_statistics(n) if family == "P" else q_via_statistics(n)


def evaluation_anchors(n: int) -> Tuple[int, int]:
    """(n!, 2^n n!): the values of A_n(1) and B_n(1)."""
    return factorial(n), 2 ** n * factorial(n)
