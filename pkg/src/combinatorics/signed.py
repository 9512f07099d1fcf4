"""
Type B (signed) permutations.

A signed permutation is stored as its unsigned base word plus one sign per
position, so an orbit is a sweep over sign masks. Mask order is binary
counting with bit i standing for position i+1 (mask 0 = all positive).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from combinatorics.enumeration import alternating_descent_matrix, sign_matrix
from combinatorics.permutations import (
    BoundaryConvention,
    Direction,
    Permutation,
    euler_number,
    is_alternating,
    is_alternating_descent,
    iter_permutations,
    stat_profile,
)


def signs_from_mask(mask: int, n: int) -> Tuple[int, ...]:
    return tuple(-1 if (mask >> i) & 1 else 1 for i in range(n))


@dataclass(frozen=True)
class SignedPermutation:
    """An element of B_n: base word |sigma| and the sign of every entry."""

    base: Permutation
    signs: Tuple[int, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != self.base.n:
            raise ValueError(f"{len(signs)} signs for a word of length {self.base.n}")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1 or -1, got {signs}")

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "SignedPermutation":
        """Build from signed values, e.g. (2, -1)."""
        if any(v == 0 for v in word):
            raise ValueError("signed words cannot contain 0")
        return cls(Permutation(tuple(abs(v) for v in word)), tuple(1 if v > 0 else -1 for v in word))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def word(self) -> Tuple[int, ...]:
        return tuple(s * v for s, v in zip(self.signs, self.base.word))

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


def iter_signed(n: int, first: Optional[int] = None) -> Iterator[SignedPermutation]:
    """
    Yield all 2^n n! elements of B_n, grouped by base permutation (lexicographic)
    and then by sign mask. ``first`` restricts the base to one first entry.
    """
    masks = [signs_from_mask(mask, n) for mask in range(2 ** max(n, 0))]
    for p in iter_permutations(n, first):
        for signs in masks:
            yield SignedPermutation(p, signs)


def alt_descent_set_B(s: SignedPermutation) -> FrozenSet[int]:
    """Alternating descent positions in {0} u [n-1] of the word prepended by 0."""
    word = s.word
    positions = {i for i in range(1, s.n) if is_alternating_descent(word, i)}
    if s.n and word[0] > 0:
        positions.add(0)
    return frozenset(positions)


def d_hat_B(s: SignedPermutation) -> int:
    return len(alt_descent_set_B(s))


def d_hat_typeA_on_signed(s: SignedPermutation) -> int:
    """Alternating descents of a signed word, position 0 not considered."""
    return len(alt_descent_set_B(s) - {0})


def orbit(p: Permutation) -> List[SignedPermutation]:
    """The 2^n signings of ``p``, in mask order."""
    return [SignedPermutation(p, signs_from_mask(mask, p.n)) for mask in range(2 ** p.n)]


def iso_copies(p: Permutation) -> List[SignedPermutation]:
    """
    Signed permutations order isomorphic to ``p``.

    For each choice of signs on the values 1..n, the signed values are sorted
    and position i receives the p(i)-th smallest one.
    """
    copies = []
    for mask in range(2 ** p.n):
        value_signs = signs_from_mask(mask, p.n)
        values = sorted(sign * value for sign, value in zip(value_signs, range(1, p.n + 1)))
        copies.append(SignedPermutation.from_word([values[v - 1] for v in p.word]))
    return copies


def negate(s: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(s.base, tuple(-sign for sign in s.signs))


def is_snake(s: SignedPermutation) -> bool:
    """Down-up alternating with a positive first entry."""
    if s.n < 1:
        raise ValueError("snakes have length n >= 1")
    return s.word[0] > 0 and is_alternating(s.word, Direction.DOWN_UP)


@lru_cache(maxsize=None)
def _ranked_completions(remaining: int, below: int, rising: bool) -> int:
    """
    Number of ways to finish an alternating signed word.

    The unused absolute values contribute 2*remaining signed values, a set
    symmetric about 0; ``below`` of them lie under the last letter and the
    next comparison must rise iff ``rising``. Taking the value of rank r also
    removes its mirror at rank 2*remaining-1-r.
    """
    if remaining == 0:
        return 1
    size = 2 * remaining
    ranks = range(below, size) if rising else range(0, below)
    total = 0
    for r in ranks:
        mirror = size - 1 - r
        total += _ranked_completions(remaining - 1, r - (1 if mirror < r else 0), not rising)
    return total


def snake_number(n: int) -> int:
    """
    Number S_n of snakes of length n.

    A snake is a down-up word whose first letter exceeds sigma(0) = 0, so the
    count starts from the rank of 0 among all 2n signed values.
    """
    if n < 1:
        raise ValueError(f"snake_number is defined for n >= 1, got {n}")
    return _ranked_completions(n, n, True)


def du_b_number(n: int) -> int:
    """DU_n^(B) = 2^n E_n, the number of down-up signed permutations."""
    if n < 1:
        raise ValueError(f"du_b_number is defined for n >= 1, got {n}")
    return 2 ** n * euler_number(n)


def du_b_number_ranked(n: int) -> int:
    """DU_n^(B) from the rank dynamic program (independent of E_n)."""
    if n < 1:
        raise ValueError(f"du_b_number is defined for n >= 1, got {n}")
    size = 2 * n
    return sum(_ranked_completions(n - 1, r - (1 if size - 1 - r < r else 0), False) for r in range(size))


def count_alternating_signed(n: int, direction: Direction, positive_start: Optional[bool] = None) -> int:
    """Brute-force count of alternating elements of B_n."""
    total = 0
    for s in iter_signed(n):
        if positive_start is not None and (s.word[0] > 0) != positive_start:
            continue
        if is_alternating(s.word, direction):
            total += 1
    return total


def snake_number_bruteforce(n: int) -> int:
    if n < 1:
        raise ValueError(f"snake_number is defined for n >= 1, got {n}")
    return sum(1 for s in iter_signed(n) if is_snake(s))


def du_b_number_bruteforce(n: int) -> int:
    if n < 1:
        raise ValueError(f"du_b_number is defined for n >= 1, got {n}")
    return count_alternating_signed(n, Direction.DOWN_UP)


@dataclass(frozen=True)
class SignViolation:
    """A position whose orbit outcome is not fixed by the designated sign."""

    position: int
    kind: str
    sign_position: int


def sign_determination_violations(p: Permutation) -> List[SignViolation]:
    """
    Check, over the whole orbit of ``p``, which sign decides each position.

    With the CLOSED_HIGH profile of p:
      double ascent i: alternating descent at i-1 is fixed by the sign at i;
      double descent i: alternating descent at i is fixed by the sign at i;
      peak i: descents at i-1 and i agree and are fixed by the sign at i;
      valley i: alternating descent at i is fixed by the sign at i+1.
    Positions outside [n-1] are skipped. Returns the violations found.
    """
    n = p.n
    if n == 0:
        return []
    words = sign_matrix(n) * np.array(p.word, dtype=sign_matrix(n).dtype)
    outcomes = alternating_descent_matrix(words)
    negative = words < 0
    profile = stat_profile(p, BoundaryConvention.CLOSED_HIGH)

    violations = []
    for i in range(1, n + 1):
        if i in profile.da_set:
            kind, positions, sign_at = "double ascent", (i - 1,), i
        elif i in profile.dd_set:
            kind, positions, sign_at = "double descent", (i,), i
        elif i in profile.pk_set:
            kind, positions, sign_at = "peak", (i - 1, i), i
        else:
            kind, positions, sign_at = "valley", (i,), i + 1
        positions = tuple(q for q in positions if 1 <= q <= n - 1)
        if not positions or sign_at > n:
            continue
        columns = outcomes[:, [q - 1 for q in positions]]
        decided = True
        for block in (negative[:, sign_at - 1], ~negative[:, sign_at - 1]):
            rows = columns[block]
            if len(rows) and (rows != rows[0]).any():
                decided = False
        if kind == "peak" and len(positions) == 2 and (columns[:, 0] != columns[:, 1]).any():
            decided = False
        if not decided:
            violations.append(SignViolation(position=i, kind=kind, sign_position=sign_at))
    return violations
