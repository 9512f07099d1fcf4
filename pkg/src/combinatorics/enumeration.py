"""
Vectorised exhaustive enumeration.

Permutation words are materialised as small-integer numpy blocks, one block
per first entry, and signed words are produced by broadcasting the sign-mask
matrix over a block. Every statistic is a reduction over boolean arrays.
Histograms coming from different blocks are combined by addition, so the
order in which blocks are consumed never changes a result.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from combinatorics.permutations import BoundaryConvention, Direction

logger = logging.getLogger(__name__)

WORD_DTYPE = np.int16


def permutation_block(n: int, first: Optional[int] = None) -> np.ndarray:
    """
    All permutations of [n] (optionally with a fixed first entry) as rows.

    Rows come in lexicographic order, matching iter_permutations.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return np.zeros((1, 0), dtype=WORD_DTYPE)
    values = range(1, n + 1)
    if first is None:
        rows = list(itertools.permutations(values))
    else:
        rest = [v for v in values if v != first]
        rows = [(first,) + tail for tail in itertools.permutations(rest)]
    return np.array(rows, dtype=WORD_DTYPE).reshape(-1, n)


def iter_blocks(n: int, rows_per_chunk: int) -> Iterator[np.ndarray]:
    """Yield S_n in first-entry partitions, each split into chunks of bounded size."""
    if n == 0:
        yield permutation_block(0)
        return
    for first in range(1, n + 1):
        block = permutation_block(n, first)
        pieces = max(1, -(-len(block) // max(1, rows_per_chunk)))
        for piece in np.array_split(block, pieces):
            if len(piece):
                yield piece


@lru_cache(maxsize=None)
def sign_matrix(n: int) -> np.ndarray:
    """Row m holds the signs of mask m: bit i set means position i+1 is negative."""
    masks = np.arange(2 ** n, dtype=np.int64)[:, None]
    bits = (masks >> np.arange(n, dtype=np.int64)) & 1
    signs = np.where(bits == 1, -1, 1).astype(WORD_DTYPE)
    signs.setflags(write=False)
    return signs


def signed_words(perms: np.ndarray) -> np.ndarray:
    """Every signing of every row, grouped by base row then by mask."""
    n = perms.shape[1]
    signs = sign_matrix(n)
    return (perms[:, None, :] * signs[None, :, :]).reshape(-1, n)


@lru_cache(maxsize=None)
def iso_value_matrix(n: int) -> np.ndarray:
    """Row m: the values 1..n signed by mask m (bit v-1 for value v), sorted."""
    values = sign_matrix(n) * np.arange(1, n + 1, dtype=WORD_DTYPE)
    values = np.sort(values, axis=1)
    values.setflags(write=False)
    return values


def iso_words(perms: np.ndarray) -> np.ndarray:
    """Signed words order isomorphic to each row, grouped by base row then by value mask."""
    n = perms.shape[1]
    if n == 0:
        return perms.copy()
    copies = iso_value_matrix(n)[:, perms.astype(np.int64) - 1]
    return copies.transpose(1, 0, 2).reshape(-1, n)


def alternating_descent_matrix(words: np.ndarray) -> np.ndarray:
    """Column j is True where position j+1 is an alternating descent."""
    rows, n = words.shape
    if n < 2:
        return np.zeros((rows, 0), dtype=bool)
    descents = words[:, :-1] > words[:, 1:]
    odd = np.arange(1, n) % 2 == 1
    return np.where(odd, descents, ~descents)


def alternating_descent_counts(words: np.ndarray) -> np.ndarray:
    return alternating_descent_matrix(words).sum(axis=1)


def descent_set_masks(words: np.ndarray) -> np.ndarray:
    """Alternating descent sets on [n-1] as bitmasks (bit i-1 for position i)."""
    matrix = alternating_descent_matrix(words).astype(np.int64)
    weights = np.int64(1) << np.arange(matrix.shape[1], dtype=np.int64)
    return matrix @ weights


def alternating_rows(words: np.ndarray, direction: Direction) -> np.ndarray:
    """Boolean per row: does the word alternate in the given direction."""
    rows, n = words.shape
    if n < 2:
        return np.ones(rows, dtype=bool)
    descents = words[:, :-1] > words[:, 1:]
    expected = np.arange(n - 1) % 2 == 0
    if direction is Direction.UP_DOWN:
        expected = ~expected
    return (descents == expected).all(axis=1)


def profile_arrays(words: np.ndarray, conv: BoundaryConvention) -> Tuple[np.ndarray, ...]:
    """Per-row (da, dd, val, pk) counts of the decorated words."""
    rows, n = words.shape
    left, right = conv.boundary_values(n)
    decorated = np.hstack([
        np.full((rows, 1), left, dtype=WORD_DTYPE),
        words.astype(WORD_DTYPE),
        np.full((rows, 1), right, dtype=WORD_DTYPE),
    ])
    prev, cur, nxt = decorated[:, :-2], decorated[:, 1:-1], decorated[:, 2:]
    rising_in = prev < cur
    rising_out = cur < nxt
    da = (rising_in & rising_out).sum(axis=1)
    dd = (~rising_in & ~rising_out).sum(axis=1)
    val = (~rising_in & rising_out).sum(axis=1)
    pk = (rising_in & ~rising_out).sum(axis=1)
    return da, dd, val, pk


def histogram(values: np.ndarray, size: int) -> List[int]:
    """Exact Python-int histogram of small non-negative integers."""
    if values.size == 0:
        return [0] * size
    return [int(c) for c in np.bincount(values.astype(np.int64), minlength=size)[:size]]


def orbit_histograms(perms: np.ndarray) -> np.ndarray:
    """
    Row r: histogram of d-hat (position 0 ignored) over the 2^n signings of row r.

    Entries are at most 2^n, so int64 is exact.
    """
    rows, n = perms.shape
    size = max(n, 1)
    counts = alternating_descent_counts(signed_words(perms)).reshape(rows, -1).astype(np.int64)
    offsets = np.arange(rows, dtype=np.int64)[:, None] * size
    flat = np.bincount((counts + offsets).ravel(), minlength=rows * size)
    return flat.reshape(rows, size)


def add_histograms(left: List[int], right: List[int]) -> List[int]:
    size = max(len(left), len(right))
    left = left + [0] * (size - len(left))
    right = right + [0] * (size - len(right))
    return [a + b for a, b in zip(left, right)]


def profile_census(n: int, conv: BoundaryConvention,
                   rows_per_chunk: int = 65536) -> Dict[Tuple[int, int, int], int]:
    """
    Count permutations of [n] by their (dda, val, pk) signature.

    Every weight formula in the toolkit depends on a permutation only through
    this signature, so sums over S_n reduce to sums over the census.
    """
    census: Counter = Counter()
    for block in iter_blocks(n, rows_per_chunk):
        da, dd, val, pk = profile_arrays(block, conv)
        stacked = np.stack([da + dd, val, pk], axis=1)
        keys, counts = np.unique(stacked, axis=0, return_counts=True)
        for key, count in zip(keys, counts):
            census[(int(key[0]), int(key[1]), int(key[2]))] += int(count)
    logger.debug(f"profile census n={n} {conv.name}: {len(census)} signatures")
    return dict(census)


def alternating_descent_histogram(n: int, rows_per_chunk: int = 65536) -> List[int]:
    """Histogram of d-hat over S_n (length max(n, 1))."""
    size = max(n, 1)
    total = [0] * size
    for block in iter_blocks(n, rows_per_chunk):
        total = add_histograms(total, histogram(alternating_descent_counts(block), size))
    return total


def alternating_count(n: int, direction: Direction, rows_per_chunk: int = 65536) -> int:
    return sum(int(alternating_rows(block, direction).sum()) for block in iter_blocks(n, rows_per_chunk))


@dataclass(frozen=True)
class SignedCensus:
    """
    Everything the type B routes need from one sweep of B_n (n >= 1).

    minus / plus: histograms of d-hat_B over B_n^- / B_n^+.
    unsigned_start: histogram of d-hat (position 0 ignored) over all of B_n.
    minus_descent_sets: counts of each alternating descent set (bitmask on
        [n-1]) over B_n^-.
    down_up: number of down-up alternating signed words.
    snakes: number of snakes.
    """

    n: int
    minus: Tuple[int, ...]
    plus: Tuple[int, ...]
    unsigned_start: Tuple[int, ...]
    minus_descent_sets: Tuple[int, ...]
    down_up: int
    snakes: int


def signed_census(n: int, chunk_size: int = 65536) -> SignedCensus:
    """Sweep B_n once, block by block."""
    if n < 1:
        raise ValueError(f"signed census needs n >= 1, got {n}")
    size = n + 1
    minus = [0] * size
    plus = [0] * size
    unsigned = [0] * size
    sets = [0] * (2 ** (n - 1))
    down_up = 0
    snakes = 0
    rows_per_chunk = max(1, chunk_size // (2 ** n))
    for block in iter_blocks(n, rows_per_chunk):
        words = signed_words(block)
        d_hat = alternating_descent_counts(words)
        negative_start = words[:, 0] < 0
        minus = add_histograms(minus, histogram(d_hat[negative_start], size))
        plus = add_histograms(plus, histogram(d_hat[~negative_start] + 1, size))
        unsigned = add_histograms(unsigned, histogram(d_hat, size))
        sets = add_histograms(sets, histogram(descent_set_masks(words[negative_start]), len(sets)))
        alternating = alternating_rows(words, Direction.DOWN_UP)
        down_up += int(alternating.sum())
        snakes += int((alternating & ~negative_start).sum())
    logger.debug(f"signed census n={n}: {sum(minus) + sum(plus)} signed words")
    return SignedCensus(
        n=n,
        minus=tuple(minus),
        plus=tuple(plus),
        unsigned_start=tuple(unsigned),
        minus_descent_sets=tuple(sets),
        down_up=down_up,
        snakes=snakes,
    )
