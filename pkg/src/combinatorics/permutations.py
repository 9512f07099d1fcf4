"""
Type A permutations and the statistics built on them.

Positions are 1-based throughout. The decorated word of a boundary convention
(sigma(0) and sigma(n+1)) is never stored; boundary values are computed on
demand.
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple


class BoundaryConvention(Enum):
    """Values prepended and appended to a word before classifying positions."""

    CLOSED_HIGH = "closed_high"   # sigma(0) = n+1, sigma(n+1) = n+1
    ZERO_HIGH = "zero_high"       # sigma(0) = 0,   sigma(n+1) = n+1

    def boundary_values(self, n: int) -> Tuple[int, int]:
        """Return (sigma(0), sigma(n+1)) for a word of length n."""
        if self is BoundaryConvention.CLOSED_HIGH:
            return n + 1, n + 1
        return 0, n + 1


class Direction(Enum):
    DOWN_UP = "down_up"   # sigma(1) > sigma(2) < sigma(3) > ...
    UP_DOWN = "up_down"   # sigma(1) < sigma(2) > sigma(3) < ...


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of [{len(word)}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(v) for v in self.word)
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True)
class StatProfile:
    """Double ascents, double descents, valleys and peaks of a decorated word."""

    da_set: FrozenSet[int] = field(default_factory=frozenset)
    dd_set: FrozenSet[int] = field(default_factory=frozenset)
    val_set: FrozenSet[int] = field(default_factory=frozenset)
    pk_set: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def da(self) -> int:
        return len(self.da_set)

    @property
    def dd(self) -> int:
        return len(self.dd_set)

    @property
    def val(self) -> int:
        return len(self.val_set)

    @property
    def pk(self) -> int:
        return len(self.pk_set)

    @property
    def dda(self) -> int:
        return self.da + self.dd

    def signature(self) -> Tuple[int, int, int]:
        """(dda, val, pk): all the weight formulas depend on."""
        return self.dda, self.val, self.pk


def iter_permutations(n: int, first: Optional[int] = None) -> Iterator[Permutation]:
    """
    Yield the permutations of [n] in lexicographic order.

    Args:
        n: size, n >= 0 (n = 0 yields the empty permutation once).
        first: restrict the stream to words starting with this entry; the
            streams for first = 1..n partition S_n.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = range(1, n + 1)
    if first is None:
        for word in itertools.permutations(values):
            yield Permutation(word)
        return
    if not 1 <= first <= n:
        raise ValueError(f"first entry {first} outside [1, {n}]")
    rest = [v for v in values if v != first]
    for tail in itertools.permutations(rest):
        yield Permutation((first,) + tail)


def first_entry_partitions(n: int) -> List[int]:
    """First entries labelling the independent sub-streams of S_n."""
    return list(range(1, n + 1))


def is_alternating_descent(word: Sequence[int], i: int) -> bool:
    """True if 1-based position i of ``word`` is an alternating descent."""
    if i % 2 == 1:
        return word[i - 1] > word[i]
    return word[i - 1] < word[i]


def alt_descent_set(p: Permutation) -> FrozenSet[int]:
    """Positions i in [n-1] with an alternating descent."""
    return frozenset(i for i in range(1, p.n) if is_alternating_descent(p.word, i))


def alt_descent_count(p: Permutation) -> int:
    return len(alt_descent_set(p))


def decorated_value(p: Permutation, conv: BoundaryConvention, i: int) -> int:
    """Entry i (0 <= i <= n+1) of the decorated word."""
    left, right = conv.boundary_values(p.n)
    if i == 0:
        return left
    if i == p.n + 1:
        return right
    return p.word[i - 1]


def stat_profile(p: Permutation, conv: BoundaryConvention) -> StatProfile:
    """Classify every i in [n] as a double ascent, double descent, valley or peak."""
    sets = {"da": set(), "dd": set(), "val": set(), "pk": set()}
    for i in range(1, p.n + 1):
        prev = decorated_value(p, conv, i - 1)
        cur = decorated_value(p, conv, i)
        nxt = decorated_value(p, conv, i + 1)
        if prev < cur < nxt:
            sets["da"].add(i)
        elif prev > cur > nxt:
            sets["dd"].add(i)
        elif prev > cur < nxt:
            sets["val"].add(i)
        else:
            sets["pk"].add(i)
    return StatProfile(
        da_set=frozenset(sets["da"]),
        dd_set=frozenset(sets["dd"]),
        val_set=frozenset(sets["val"]),
        pk_set=frozenset(sets["pk"]),
    )


def is_alternating(word: Sequence[int], direction: Direction) -> bool:
    """
    Check whether consecutive comparisons alternate.

    Works on any sequence of distinct numbers, so signed words use it too.
    The empty word and single letters are vacuously alternating.
    """
    word = tuple(word)
    down = direction is Direction.DOWN_UP
    for i in range(len(word) - 1):
        if down and not word[i] > word[i + 1]:
            return False
        if not down and not word[i] < word[i + 1]:
            return False
        down = not down
    return True


@lru_cache(maxsize=None)
def _seidel_rows(n: int) -> Tuple[int, ...]:
    """E_0..E_n from the boustrophedon (Seidel-Entringer) triangle."""
    numbers = [1]
    row = [1]
    for _ in range(n):
        new_row = [0]
        for value in reversed(row):
            new_row.append(new_row[-1] + value)
        row = new_row
        numbers.append(row[-1])
    return tuple(numbers)


def euler_number(n: int) -> int:
    """
    Number E_n of down-up alternating permutations of [n].

    Args:
        n: size, n >= 1.

    Returns:
        int: E_n, computed exactly with the boustrophedon triangle.
    """
    if n < 1:
        raise ValueError(f"euler_number is defined for n >= 1, got {n}")
    return _seidel_rows(n)[n]


def euler_number_bruteforce(n: int) -> int:
    """Count down-up permutations by enumeration (test oracle)."""
    if n < 1:
        raise ValueError(f"euler_number is defined for n >= 1, got {n}")
    return sum(1 for p in iter_permutations(n) if is_alternating(p.word, Direction.DOWN_UP))
