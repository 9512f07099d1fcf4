"""
Hoffman's derivative polynomials of tan and sec.

    d^n/dz^n tan z = P_n(tan z),   d^n/dz^n sec z = Q_n(tan z) sec z

P_0 = x, P_{n+1} = (1 + x^2) P_n';  Q_0 = 1, Q_{n+1} = x Q_n + (1 + x^2) Q_n'.
The statistic forms sum x^dda (1 + x^2)^val over S_n under the two boundary
conventions.
"""

import logging
import threading
from typing import Dict, List, Optional

from algebra.polyring import IntPoly
from combinatorics.enumeration import profile_census
from combinatorics.permutations import BoundaryConvention
from config import get_settings
from exceptions import EnumerationBoundError

logger = logging.getLogger(__name__)

ONE_PLUS_X2 = IntPoly((1, 0, 1))
X = IntPoly.x()


class DerivativePolynomialTable:
    """
    Memo table for P_n and Q_n.

    Readers take the lock only to extend a table; published entries are
    immutable IntPoly values.
    """

    def __init__(self):
        self._tables: Dict[str, List[IntPoly]] = {"P": [X], "Q": [IntPoly.constant(1)]}
        self._lock = threading.Lock()

    @staticmethod
    def _next(family: str, previous: IntPoly) -> IntPoly:
        if family == "P":
            return ONE_PLUS_X2 * previous.derivative()
        return X * previous + ONE_PLUS_X2 * previous.derivative()

    def get(self, family: str, n: int) -> IntPoly:
        if family not in self._tables:
            raise ValueError(f"unknown derivative family {family!r}")
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        table = self._tables[family]
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(self._next(family, table[-1]))
            logger.debug(f"{family} table extended to n={len(table) - 1}")
        return table[n]

    def p(self, n: int) -> IntPoly:
        return self.get("P", n)

    def q(self, n: int) -> IntPoly:
        return self.get("Q", n)

    def inject(self, family: str, n: int, poly: IntPoly):
        """
        Replace entry n (filling the table up to n first).

        Used to prime the table from a cache file; entries above n that were
        already published keep their values.
        """
        self.get(family, n)
        with self._lock:
            self._tables[family][n] = poly

    def snapshot(self) -> Dict[str, List[IntPoly]]:
        with self._lock:
            return {family: list(table) for family, table in self._tables.items()}


_table = DerivativePolynomialTable()


def install_table(table: Optional[DerivativePolynomialTable] = None) -> DerivativePolynomialTable:
    """Make ``table`` (a fresh one if None) the module table; return the previous one."""
    global _table
    previous = _table
    _table = table if table is not None else DerivativePolynomialTable()
    return previous


def p_poly(n: int) -> IntPoly:
    return _table.p(n)


def q_poly(n: int) -> IntPoly:
    return _table.q(n)


def _statistic_sum(n: int, conv: BoundaryConvention, family: str, bound: Optional[int]) -> IntPoly:
    settings = get_settings()
    bound = settings.enumeration.type_a if bound is None else bound
    if n < 1:
        raise ValueError(f"the statistic form of {family}_n needs n >= 1, got {n}")
    if n > bound:
        raise EnumerationBoundError(f"{family}_n via statistics", n, bound,
                                    hint=f"use {family.lower()}_poly for the recurrence route")
    result = IntPoly()
    for (dda, val, _pk), count in profile_census(n, conv, settings.chunk_size).items():
        result = result + (IntPoly.monomial(dda) * ONE_PLUS_X2 ** val).scale(count)
    return result


def p_via_statistics(n: int, bound: Optional[int] = None) -> IntPoly:
    """Sum of x^dda (1+x^2)^val over CLOSED_HIGH profiles of S_n."""
    return _statistic_sum(n, BoundaryConvention.CLOSED_HIGH, "P", bound)


def q_via_statistics(n: int, bound: Optional[int] = None) -> IntPoly:
    """Sum of x^dda (1+x^2)^val over ZERO_HIGH profiles of S_n."""
    return _statistic_sum(n, BoundaryConvention.ZERO_HIGH, "Q", bound)
