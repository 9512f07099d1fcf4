"""
Identity catalog.

Each check is a function of a CheckContext that returns normally on success
and raises CheckFailure carrying the smallest witness it found. Enumeration
ranges are gated by the runner before a check starts, so enumeration routes
are called here with the context's bounds.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Callable, Dict, Iterator, Optional, Tuple

import numpy as np

from algebra.polyring import IntPoly, mobius_hom_sub, reciprocal_transform
from algebra.series import SeriesQx, egf_from_family, series_equal
from combinatorics.enumeration import (
    alternating_count,
    alternating_descent_counts,
    iso_words,
    iter_blocks,
    orbit_histograms,
    profile_arrays,
)
from combinatorics.permutations import (
    BoundaryConvention,
    Direction,
    Permutation,
    euler_number,
    iter_permutations,
)
from combinatorics.signed import du_b_number, du_b_number_ranked, sign_determination_violations, snake_number
from config import get_settings
from exceptions import DegreeOverflowError, UnknownCheckError
from polynomials import descent_sets
from polynomials.alternating import (
    ONE_PLUS_X2,
    a_hat_bruteforce,
    a_hat_combinatorial,
    a_hat_via_p,
    b_hat_bruteforce,
    b_hat_combinatorial,
    b_hat_diff_recurrence,
    b_hat_minus,
    b_hat_minus_via_descent_sets,
    b_hat_recurrence_rows,
    b_hat_split,
    b_hat_via_q,
    doubled_valley_sum,
    orbit_polynomial,
    peak_valley_weight,
    profile_signatures,
    signed_alternating_counts,
    unsigned_start_bruteforce,
    weighted_census_sum,
)
from polynomials.derivative import p_poly, p_via_statistics, q_poly, q_via_statistics
from verification import closed_forms
from verification.models import Witness

logger = logging.getLogger(__name__)

CLOSED_HIGH = BoundaryConvention.CLOSED_HIGH
ZERO_HIGH = BoundaryConvention.ZERO_HIGH


class Scale(Enum):
    """What limits a check's range."""

    TYPE_A = "type_a"    # enumeration of S_n; skipped above the type A bound
    TYPE_B = "type_b"    # enumeration of B_n (or 2^n n! work); skipped above the type B bound
    SERIES = "series"    # truncated generating functions of order N
    FORMULA = "formula"  # formula routes; enumeration only as an oracle below the bounds


class CheckFailure(Exception):
    def __init__(self, witness: Witness):
        self.witness = witness
        super().__init__(f"counterexample at n={witness.n}")


@dataclass(frozen=True)
class CheckContext:
    n_min: int
    n_max: int
    bound_a: int
    bound_b: int
    order: Optional[int] = None

    @property
    def x_order(self) -> int:
        return self.order + 2

    def sizes(self) -> Iterator[int]:
        return iter(range(self.n_min, self.n_max + 1))


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    scale: Scale
    n_min: int
    run: Callable[[CheckContext], None]
    summary: str


CHECK_ORDER: Tuple[str, ...] = (
    "L1", "L2", "pan1", "pan2", "Qi1", "eqL", "lemma21", "my1", "my2", "A1", "A2",
    "hof1", "hof2", "che", "p6", "bminus_egf", "euler_egf", "snake_egf", "dub_2nEn",
    "key", "beta_partition", "reciprocal", "rec_prop", "rec_diff", "b_n0_snake",
)

CATALOG: Dict[str, CatalogEntry] = {}


def _register(check_id: str, scale: Scale, summary: str, n_min: int = 1):
    def decorator(fn: Callable[[CheckContext], None]) -> Callable[[CheckContext], None]:
        CATALOG[check_id] = CatalogEntry(check_id, scale, n_min, fn, summary)
        return fn
    return decorator


# -- comparison helpers -----------------------------------------------------

def expect_poly(n: int, expected: IntPoly, actual: IntPoly, detail: str):
    """Fail at the lowest coefficient where the polynomials differ."""
    if expected == actual:
        return
    size = max(len(expected.coeffs), len(actual.coeffs))
    k = next(k for k in range(size) if expected.coefficient(k) != actual.coefficient(k))
    raise CheckFailure(Witness(n=n, position=k, expected=expected.coefficient(k),
                               actual=actual.coefficient(k), detail=detail))


def expect_equal(n: int, expected: int, actual: int, detail: str, position: Optional[int] = None):
    if expected != actual:
        raise CheckFailure(Witness(n=n, position=position, expected=expected, actual=actual, detail=detail))


def substituted(n: int, poly: IntPoly, m: int) -> IntPoly:
    try:
        return mobius_hom_sub(poly, m)
    except DegreeOverflowError as exc:
        raise DegreeOverflowError(str(exc), n=n)


def expect_series(left: SeriesQx, right: SeriesQx, detail: str):
    """left is the assembled family, right the closed form."""
    comparison = series_equal(left, right)
    if not comparison:
        n, k = comparison.first_mismatch
        raise CheckFailure(Witness(n=n, x_degree=k, expected=comparison.right,
                                   actual=comparison.left, detail=detail))


def _rows_per_chunk(n: int) -> int:
    return max(1, get_settings().chunk_size // (2 ** n))


def _first_row(mask: np.ndarray) -> Optional[int]:
    return int(np.argmax(mask)) if mask.any() else None


def _permutation(row: np.ndarray) -> Permutation:
    return Permutation(tuple(int(v) for v in row))


# -- boundary facts ---------------------------------------------------------

def _boundary_facts(ctx: CheckContext, conv: BoundaryConvention, offset: int, length: Callable[[int], int]):
    for n in ctx.sizes():
        for (dda, val, pk), _count in sorted(profile_signatures(n, conv, ctx.bound_a).items()):
            signature = f"dda={dda} val={val} pk={pk}"
            expect_equal(n, pk + offset, val, f"val against pk under {conv.name}: {signature}")
            expect_equal(n, length(n), 2 * val + dda, f"2 val + dda under {conv.name}: {signature}")


@_register("L1", Scale.TYPE_A, "CLOSED_HIGH: val = pk + 1 and 2 val + dda = n + 1")
def check_l1(ctx: CheckContext):
    _boundary_facts(ctx, CLOSED_HIGH, 1, lambda n: n + 1)


@_register("L2", Scale.TYPE_A, "ZERO_HIGH: val = pk and 2 val + dda = n")
def check_l2(ctx: CheckContext):
    _boundary_facts(ctx, ZERO_HIGH, 0, lambda n: n)


# -- weight formulas ----------------------------------------------------------

@_register("pan1", Scale.TYPE_A, "2^n A_n = sum over S_n of (1+x)^dda 2^val (1+x^2)^pk")
def check_pan1(ctx: CheckContext):
    for n in ctx.sizes():
        expect_poly(n, a_hat_bruteforce(n, ctx.bound_a), a_hat_combinatorial(n, ctx.bound_a),
                    "weight formula against enumeration")


@_register("pan2", Scale.TYPE_B, "B_n = sum over S_n (0 prepended) of (1+x)^dda 2^val (1+x^2)^pk")
def check_pan2(ctx: CheckContext):
    for n in ctx.sizes():
        expect_poly(n, b_hat_bruteforce(n, ctx.bound_b), b_hat_combinatorial(n, max(n, ctx.bound_a)),
                    "weight formula against enumeration")


# -- orbits ---------------------------------------------------------------------

@_register("Qi1", Scale.TYPE_B, "orbit sums of x^d equal (1+x)^dda 2^val (1+x^2)^pk")
def check_qi1(ctx: CheckContext):
    for n in ctx.sizes():
        size = max(n, 1)
        for block in iter_blocks(n, _rows_per_chunk(n)):
            left = orbit_histograms(block)
            da, dd, val, pk = profile_arrays(block, CLOSED_HIGH)
            keys, inverse = np.unique(np.stack([da + dd, val, pk], axis=1), axis=0, return_inverse=True)
            right = np.array([peak_valley_weight(*(int(v) for v in key)).padded(size) for key in keys],
                             dtype=np.int64)
            row = _first_row((left != right[inverse.reshape(-1)]).any(axis=1))
            if row is not None:
                result = orbit_polynomial(_permutation(block[row]))
                expect_poly(n, result.right, result.left, f"orbit of {result.permutation}")
        if n <= 4:
            for p in iter_permutations(n):
                result = orbit_polynomial(p)
                expect_poly(n, result.right, result.left, f"orbit of {p}")


@_register("eqL", Scale.TYPE_B, "sum over B_n of x^d = 2^n A_n, by orbits and by Iso classes")
def check_eql(ctx: CheckContext):
    for n in ctx.sizes():
        doubled = a_hat_bruteforce(n, max(n, ctx.bound_a)).scale(2 ** n)
        expect_poly(n, doubled, unsigned_start_bruteforce(n, ctx.bound_b), "sum over B_n")
        for block in iter_blocks(n, _rows_per_chunk(n)):
            pattern = alternating_descent_counts(block)
            copies = alternating_descent_counts(iso_words(block)).reshape(len(block), -1)
            row = _first_row((copies != pattern[:, None]).any(axis=1))
            if row is not None:
                column = int(np.argmax(copies[row] != pattern[row]))
                raise CheckFailure(Witness(
                    n=n, expected=int(pattern[row]), actual=int(copies[row, column]),
                    detail=f"Iso({_permutation(block[row])}) copy {column} changes the alternating descent count",
                ))


@_register("lemma21", Scale.TYPE_B, "orbit outcomes at each position are fixed by one sign")
def check_lemma21(ctx: CheckContext):
    for n in ctx.sizes():
        for p in iter_permutations(n):
            violations = sign_determination_violations(p)
            if violations:
                v = violations[0]
                raise CheckFailure(Witness(
                    n=n, position=v.position,
                    detail=f"{p}: {v.kind} at {v.position} not decided by the sign at {v.sign_position}",
                ))


# -- derivative polynomial substitution ---------------------------------------

@_register("my1", Scale.FORMULA, "2^n (1+x^2) A_n = (1-x)^(n+1) P_n((1+x)/(1-x))")
def check_my1(ctx: CheckContext):
    series = None
    for n in ctx.sizes():
        actual = a_hat_via_p(n)
        if n <= ctx.bound_a:
            expected, detail = a_hat_bruteforce(n, ctx.bound_a), "P_n substitution against enumeration"
        else:
            if series is None:
                series = closed_forms.alternating_a(ctx.n_max, ctx.n_max + 2)
            expected, detail = series.egf_coefficient(n), "P_n substitution against the generating function"
        expect_poly(n, expected, actual, detail)
        expect_equal(n, factorial(n), actual.evaluate(1), "A_n(1) = n!")


@_register("my2", Scale.FORMULA, "B_n = (1-x)^n Q_n((1+x)/(1-x))", n_min=0)
def check_my2(ctx: CheckContext):
    series = None
    for n in ctx.sizes():
        actual = b_hat_via_q(n)
        if n <= ctx.bound_b:
            expected, detail = b_hat_bruteforce(n, ctx.bound_b), "Q_n substitution against enumeration"
        else:
            if series is None:
                series = closed_forms.alternating_b(ctx.n_max, ctx.n_max + 2)
            expected, detail = series.egf_coefficient(n), "Q_n substitution against the generating function"
        expect_poly(n, expected, actual, detail)
        expect_equal(n, 2 ** n * factorial(n), actual.evaluate(1), "B_n(1) = 2^n n!")


@_register("A1", Scale.TYPE_A, "(1-x)^(n+1) P_n((1+x)/(1-x)) as a sum over CLOSED_HIGH profiles")
def check_a1(ctx: CheckContext):
    for n in ctx.sizes():
        expect_poly(n, p_via_statistics(n, ctx.bound_a), p_poly(n), "P_n as x^dda (1+x^2)^val")
        substituted_p = substituted(n, p_poly(n), n + 1)
        expect_poly(n, doubled_valley_sum(n, CLOSED_HIGH, ctx.bound_a), substituted_p,
                    "(1+x)^dda (2+2x^2)^val form")
        expect_poly(n, ONE_PLUS_X2 * weighted_census_sum(n, CLOSED_HIGH, ctx.bound_a), substituted_p,
                    "(1+x^2) (1+x)^dda 2^val (1+x^2)^pk form")


@_register("A2", Scale.TYPE_A, "(1-x)^n Q_n((1+x)/(1-x)) as a sum over ZERO_HIGH profiles")
def check_a2(ctx: CheckContext):
    for n in ctx.sizes():
        expect_poly(n, q_via_statistics(n, ctx.bound_a), q_poly(n), "Q_n as x^dda (1+x^2)^val")
        expect_poly(n, weighted_census_sum(n, ZERO_HIGH, ctx.bound_a), substituted(n, q_poly(n), n),
                    "(1+x)^dda 2^val (1+x^2)^pk form")


# -- generating functions -------------------------------------------------------

@_register("hof1", Scale.SERIES, "sum P_n z^n/n! = (sin z + x cos z)/(cos z - x sin z)")
def check_hof1(ctx: CheckContext):
    left = egf_from_family(p_poly, ctx.order, 0, ctx.x_order)
    expect_series(left, closed_forms.hoffman_tan(ctx.order, ctx.x_order), "P_n generating function")


@_register("hof2", Scale.SERIES, "sum Q_n z^n/n! = 1/(cos z - x sin z)")
def check_hof2(ctx: CheckContext):
    left = egf_from_family(q_poly, ctx.order, 0, ctx.x_order)
    expect_series(left, closed_forms.hoffman_sec(ctx.order, ctx.x_order), "Q_n generating function")


@_register("che", Scale.SERIES, "sum A_n z^n/n! from sec and tan of (1-x)z")
def check_che(ctx: CheckContext):
    def a_hat(n: int) -> IntPoly:
        return a_hat_combinatorial(n, ctx.bound_a) if n <= ctx.bound_a else a_hat_via_p(n)

    left = egf_from_family(a_hat, ctx.order, 1, ctx.x_order)
    expect_series(left, closed_forms.alternating_a(ctx.order, ctx.x_order), "A_n generating function")


@_register("p6", Scale.SERIES, "sum B_n z^n/n! from cos and sin of z(1-x)")
def check_p6(ctx: CheckContext):
    def b_hat(n: int) -> IntPoly:
        if n == 0:
            return IntPoly.constant(1)
        return b_hat_combinatorial(n, ctx.bound_a) if n <= ctx.bound_a else b_hat_via_q(n)

    left = egf_from_family(b_hat, ctx.order, 0, ctx.x_order)
    expect_series(left, closed_forms.alternating_b(ctx.order, ctx.x_order), "B_n generating function")


@_register("bminus_egf", Scale.SERIES, "sum B_n^- z^n/n! from cos and sin of z(x-1)")
def check_bminus_egf(ctx: CheckContext):
    for n in range(1, min(ctx.order, ctx.bound_b) + 1):
        expect_poly(n, b_hat_minus(n, ctx.bound_b), b_hat_minus_via_descent_sets(n),
                    "descent-set route against enumeration")
    left = egf_from_family(b_hat_minus_via_descent_sets, ctx.order, 1, ctx.x_order)
    expect_series(left, closed_forms.alternating_b_minus(ctx.order, ctx.x_order), "B_n^- generating function")


def _with_unit(f: Callable[[int], int]) -> Callable[[int], IntPoly]:
    return lambda n: IntPoly.constant(1 if n == 0 else f(n))


@_register("euler_egf", Scale.SERIES, "1 + sum E_n z^n/n! = tan z + sec z")
def check_euler_egf(ctx: CheckContext):
    chunk = get_settings().chunk_size
    for n in range(1, min(ctx.order, ctx.bound_a) + 1):
        expect_equal(n, euler_number(n), alternating_count(n, Direction.DOWN_UP, chunk), "down-up count")
        expect_equal(n, euler_number(n), alternating_count(n, Direction.UP_DOWN, chunk), "up-down count")
    left = egf_from_family(_with_unit(euler_number), ctx.order, 0, ctx.x_order)
    expect_series(left, closed_forms.euler(ctx.order, ctx.x_order), "Euler numbers")


@_register("snake_egf", Scale.SERIES, "1 + sum S_n z^n/n! = 1/(cos z - sin z)")
def check_snake_egf(ctx: CheckContext):
    for n in range(1, min(ctx.order, ctx.bound_b) + 1):
        expect_equal(n, snake_number(n), signed_alternating_counts(n, ctx.bound_b)[1], "snakes in B_n")
    left = egf_from_family(_with_unit(snake_number), ctx.order, 0, ctx.x_order)
    expect_series(left, closed_forms.snakes(ctx.order, ctx.x_order), "snake numbers")


@_register("dub_2nEn", Scale.TYPE_B, "down-up elements of B_n number 2^n E_n")
def check_dub(ctx: CheckContext):
    for n in ctx.sizes():
        expected = 2 ** n * euler_number(n)
        expect_equal(n, expected, signed_alternating_counts(n, ctx.bound_b)[0], "down-up elements of B_n")
        expect_equal(n, expected, du_b_number(n), "du_b_number")
        expect_equal(n, expected, du_b_number_ranked(n), "rank recursion")


# -- descent sets -----------------------------------------------------------------

@_register("key", Scale.TYPE_B, "alpha_n^-(S) = multinomial(co(S)) S_s1 DU_(s2-s1) ... DU_(n-sk)")
def check_key(ctx: CheckContext):
    for n in ctx.sizes():
        counted = descent_sets.alpha_from_beta(descent_sets.beta_minus_table(n, ctx.bound_b))
        formula = descent_sets.alpha_minus_formula_table(n)
        for mask, (expected, actual) in enumerate(zip(counted.entries, formula.entries)):
            subset = sorted(descent_sets.mask_to_subset(mask))
            expect_equal(n, expected, actual, f"alpha over subset {subset}", position=mask)


@_register("beta_partition", Scale.TYPE_B, "inclusion-exclusion of the formula recovers beta_n^-")
def check_beta_partition(ctx: CheckContext):
    for n in ctx.sizes():
        counted = descent_sets.beta_minus_table(n, ctx.bound_b)
        derived = descent_sets.beta_from_alpha(descent_sets.alpha_minus_formula_table(n))
        for mask, (expected, actual) in enumerate(zip(counted.entries, derived.entries)):
            subset = sorted(descent_sets.mask_to_subset(mask))
            expect_equal(n, expected, actual, f"beta over subset {subset}", position=mask)
        expect_equal(n, 2 ** (n - 1) * factorial(n), derived.total(), "beta sums to |B_n^-|")


@_register("reciprocal", Scale.TYPE_B, "x^n B_n^-(1/x) = B_n^+(x)")
def check_reciprocal(ctx: CheckContext):
    for n in ctx.sizes():
        minus, plus = b_hat_split(n, ctx.bound_b)
        expect_poly(n, plus, reciprocal_transform(minus, n), "negation bijection")
        expect_equal(n, 2 ** (n - 1) * factorial(n), minus.evaluate(1), "|B_n^-|")


# -- recurrences --------------------------------------------------------------------

@_register("rec_prop", Scale.FORMULA, "coefficient recurrence for B(n, k) with B(n, 0) = S_n")
def check_rec_prop(ctx: CheckContext):
    rows = b_hat_recurrence_rows(ctx.n_max)
    for n in ctx.sizes():
        actual = IntPoly(rows[n])
        expect_poly(n, b_hat_via_q(n), actual, "recurrence rows against Q_n substitution")
        if n <= ctx.bound_b:
            expect_poly(n, b_hat_bruteforce(n, ctx.bound_b), actual, "recurrence rows against enumeration")
        expect_equal(n, snake_number(n), rows[n][0], "B(n, 0) = S_n", position=0)


@_register("rec_diff", Scale.FORMULA, "B_(n+1) = (n+1+x+nx^2) B_n + (1-x)(1+x^2) B_n'")
def check_rec_diff(ctx: CheckContext):
    for n in ctx.sizes():
        expect_poly(n, b_hat_via_q(n), b_hat_diff_recurrence(n), "differential recurrence")


@_register("b_n0_snake", Scale.FORMULA, "constant term of B_n is the snake number S_n")
def check_b_n0_snake(ctx: CheckContext):
    for n in ctx.sizes():
        constant = b_hat_via_q(n).coefficient(0)
        expect_equal(n, snake_number(n), constant, "B(n, 0) from Q_n", position=0)
        if n <= ctx.bound_b:
            expect_equal(n, signed_alternating_counts(n, ctx.bound_b)[1], constant,
                         "B(n, 0) against counted snakes", position=0)


def entry(check_id: str) -> CatalogEntry:
    try:
        return CATALOG[check_id]
    except KeyError:
        raise UnknownCheckError(check_id)
