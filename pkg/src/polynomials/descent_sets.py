"""
Alternating descent sets of B_n^- = {sigma in B_n : sigma(1) < 0}.

Subsets of [n-1] are bitmasks: bit i-1 stands for element i. beta counts
elements of B_n^- with a given alternating descent set, alpha counts those
whose set is contained in a given one. Position 0 never appears on B_n^-.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from combinatorics.enumeration import signed_census
from combinatorics.signed import du_b_number, snake_number
from config import get_settings
from exceptions import EnumerationBoundError

logger = logging.getLogger(__name__)


def subset_to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for element in subset:
        mask |= 1 << (element - 1)
    return mask


def mask_to_subset(mask: int) -> FrozenSet[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def _check_subset(n: int, subset: Iterable[int]) -> Tuple[int, ...]:
    elements = tuple(sorted(set(subset)))
    if n < 1:
        raise ValueError(f"descent sets need n >= 1, got {n}")
    if elements and (elements[0] < 1 or elements[-1] > n - 1):
        raise ValueError(f"{set(elements)} is not a subset of [{n - 1}]")
    return elements


def composition_of(subset: Iterable[int], n: int) -> Tuple[int, ...]:
    """co(S): the gaps (s_1, s_2 - s_1, ..., n - s_k)."""
    elements = _check_subset(n, subset)
    cuts = (0,) + elements + (n,)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def subset_of(composition: Sequence[int], n: Optional[int] = None) -> FrozenSet[int]:
    """S_gamma: the partial sums gamma_1, gamma_1 + gamma_2, ... (all but the last)."""
    parts = tuple(composition)
    if not parts or any(part < 1 for part in parts):
        raise ValueError(f"{parts} is not a composition")
    if n is not None and sum(parts) != n:
        raise ValueError(f"composition {parts} sums to {sum(parts)}, not {n}")
    sums = []
    running = 0
    for part in parts[:-1]:
        running += part
        sums.append(running)
    return frozenset(sums)


def multinomial(parts: Sequence[int]) -> int:
    result = factorial(sum(parts))
    for part in parts:
        result //= factorial(part)
    return result


def alpha_minus_formula(n: int, subset: Iterable[int]) -> int:
    """
    Number of sigma in B_n^- whose alternating descent set lies inside ``subset``.

    multinomial(co(S)) * S_{s_1} * DU^(B)_{s_2 - s_1} * ... * DU^(B)_{n - s_k}
    """
    parts = composition_of(subset, n)
    result = multinomial(parts) * snake_number(parts[0])
    for part in parts[1:]:
        result *= du_b_number(part)
    return result


@dataclass(frozen=True)
class DescentSetTable:
    """Counts indexed by subset bitmask of [n-1]."""

    n: int
    kind: str
    entries: Tuple[int, ...]

    def __getitem__(self, subset: Iterable[int]) -> int:
        _check_subset(self.n, subset)
        return self.entries[subset_to_mask(subset)]

    def total(self) -> int:
        return sum(self.entries)

    def as_dict(self) -> Dict[FrozenSet[int], int]:
        return {mask_to_subset(mask): count for mask, count in enumerate(self.entries)}


def alpha_from_beta(table: DescentSetTable) -> DescentSetTable:
    """Subset-sum (zeta) transform."""
    values = list(table.entries)
    for bit in range(table.n - 1):
        step = 1 << bit
        for mask in range(len(values)):
            if mask & step:
                values[mask] += values[mask ^ step]
    return DescentSetTable(table.n, "alpha", tuple(values))


def beta_from_alpha(table: DescentSetTable) -> DescentSetTable:
    """Inclusion-exclusion (Moebius) transform."""
    values = list(table.entries)
    for bit in range(table.n - 1):
        step = 1 << bit
        for mask in range(len(values)):
            if mask & step:
                values[mask] -= values[mask ^ step]
    return DescentSetTable(table.n, "beta", tuple(values))


def alpha_minus_formula_table(n: int) -> DescentSetTable:
    entries = tuple(alpha_minus_formula(n, mask_to_subset(mask)) for mask in range(2 ** (n - 1)))
    return DescentSetTable(n, "alpha", entries)


@lru_cache(maxsize=None)
def _beta_census(n: int, chunk_size: int) -> Tuple[int, ...]:
    return signed_census(n, chunk_size).minus_descent_sets


def beta_minus_table(n: int, bound: Optional[int] = None) -> DescentSetTable:
    """beta_n^- for every subset, by sweeping B_n."""
    settings = get_settings()
    bound = settings.enumeration.type_b if bound is None else bound
    if n < 1:
        raise ValueError(f"descent sets need n >= 1, got {n}")
    if n > bound:
        raise EnumerationBoundError("beta_n^-", n, bound)
    return DescentSetTable(n, "beta", _beta_census(n, settings.chunk_size))


def beta_minus_bruteforce(n: int, subset: Iterable[int], bound: Optional[int] = None) -> int:
    return beta_minus_table(n, bound)[subset]


def alpha_minus_bruteforce(n: int, subset: Iterable[int], bound: Optional[int] = None) -> int:
    return alpha_from_beta(beta_minus_table(n, bound))[subset]


def alpha_sums_by_size(n: int) -> List[int]:
    """
    c_k = sum of alpha_n^-(T) over |T| = k, for k = 0..n-1.

    Subsets of size k correspond to compositions with k+1 parts: a snake
    block followed by k down-up blocks. Peeling the last block gives
    g_k(m) = sum_j C(m, j) DU^(B)_j g_{k-1}(m - j), with g_0(m) = S_m.
    """
    if n < 1:
        raise ValueError(f"descent sets need n >= 1, got {n}")
    g = [0] + [snake_number(m) for m in range(1, n + 1)]
    sums = [g[n]]
    for _ in range(1, n):
        g = [0] + [
            sum(comb(m, j) * du_b_number(j) * g[m - j] for j in range(1, m))
            for m in range(1, n + 1)
        ]
        sums.append(g[n])
    return sums


def clear_caches():
    _beta_census.cache_clear()
