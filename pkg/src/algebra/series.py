"""
Truncated exponential-generating-function arithmetic.

A SeriesQx is a power series in z cut at z^order whose coefficients are
polynomials in x with rational coefficients, themselves cut at x^x_order.
Truncating in x lets us divide by series whose constant term is a polynomial
with a nonzero constant coefficient (such as x - 1) without leaving
polynomial coefficients: the inverse is taken in Q[x]/(x^(x_order+1)). An
identity whose z^n coefficients are genuine polynomials of degree at most
x_order is decided exactly by the truncated comparison.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

from algebra.polyring import IntPoly
from exceptions import InexactDivisionError, SeriesInversionError, SeriesOrderMismatchError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class RatPoly:
    """Polynomial in x over the rationals; Fraction keeps every entry reduced."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> "RatPoly":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def truncate(self, x_order: int) -> "RatPoly":
        return RatPoly(self.coeffs[:x_order + 1])

    def __add__(self, other: "RatPoly") -> "RatPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "RatPoly":
        return RatPoly(tuple(c * a for a in self.coeffs))

    def mul(self, other: "RatPoly", x_order: Optional[int] = None) -> "RatPoly":
        """Product, dropping powers above x^x_order when given."""
        if self.is_zero() or other.is_zero():
            return RatPoly()
        size = len(self.coeffs) + len(other.coeffs) - 1
        if x_order is not None:
            size = min(size, x_order + 1)
        result = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs[:size]):
            if a:
                for j, b in enumerate(other.coeffs[:size - i]):
                    result[i + j] += a * b
        return RatPoly(tuple(result))

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        return self.mul(other)

    def power(self, k: int, x_order: Optional[int] = None) -> "RatPoly":
        result = RatPoly.constant(1)
        for _ in range(k):
            result = result.mul(self, x_order)
        return result

    def inverse(self, x_order: int) -> "RatPoly":
        """Inverse in Q[x]/(x^(x_order+1)); needs a nonzero constant coefficient."""
        c0 = self.coefficient(0)
        if c0 == 0:
            raise SeriesInversionError(f"polynomial {self} has no constant term to invert")
        inv = [1 / c0]
        for k in range(1, x_order + 1):
            acc = sum((self.coefficient(j) * inv[k - j] for j in range(1, k + 1)), Fraction(0))
            inv.append(-acc / c0)
        return RatPoly(tuple(inv))

    def to_int_poly(self) -> IntPoly:
        if any(c.denominator != 1 for c in self.coeffs):
            raise InexactDivisionError(f"coefficients of {self} are not integers")
        return IntPoly(tuple(c.numerator for c in self.coeffs))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"


ONE = RatPoly.constant(1)


@dataclass(frozen=True)
class SeriesQx:
    """Sum of coeffs[n] z^n for n = 0..order, each coefficient cut at x^x_order."""

    order: int
    x_order: int
    coeffs: Tuple[RatPoly, ...]

    def __post_init__(self):
        coeffs = tuple(c.truncate(self.x_order) for c in self.coeffs)
        if len(coeffs) > self.order + 1:
            coeffs = coeffs[:self.order + 1]
        coeffs = coeffs + (RatPoly(),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int, x_order: int) -> "SeriesQx":
        return cls(order, x_order, ())

    @classmethod
    def constant(cls, c: Union[Scalar, RatPoly], order: int, x_order: int) -> "SeriesQx":
        value = c if isinstance(c, RatPoly) else RatPoly.constant(c)
        return cls(order, x_order, (value,))

    @classmethod
    def from_scalars(cls, values: Sequence[Scalar], order: int, x_order: int) -> "SeriesQx":
        return cls(order, x_order, tuple(RatPoly.constant(v) for v in values))

    @classmethod
    def z(cls, order: int, x_order: int) -> "SeriesQx":
        return cls.from_scalars([0, 1], order, x_order)

    def coefficient(self, n: int) -> RatPoly:
        return self.coeffs[n]

    def _check(self, other: "SeriesQx"):
        if (self.order, self.x_order) != (other.order, other.x_order):
            raise SeriesOrderMismatchError(
                f"orders differ: (z^{self.order}, x^{self.x_order}) vs (z^{other.order}, x^{other.x_order})"
            )

    def __add__(self, other: "SeriesQx") -> "SeriesQx":
        self._check(other)
        return SeriesQx(self.order, self.x_order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SeriesQx":
        return SeriesQx(self.order, self.x_order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "SeriesQx") -> "SeriesQx":
        return self + (-other)

    def __mul__(self, other: "SeriesQx") -> "SeriesQx":
        self._check(other)
        result = []
        for n in range(self.order + 1):
            acc = RatPoly()
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a.mul(b, self.x_order)
            result.append(acc)
        return SeriesQx(self.order, self.x_order, tuple(result))

    def __truediv__(self, other: "SeriesQx") -> "SeriesQx":
        self._check(other)
        head = other.coeffs[0]
        try:
            head_inverse = head.inverse(self.x_order)
        except SeriesInversionError:
            raise SeriesInversionError(f"series constant term {head} is not invertible")
        quotient = []
        for n in range(self.order + 1):
            acc = self.coeffs[n]
            for k in range(1, n + 1):
                b = other.coeffs[k]
                if not b.is_zero():
                    acc = acc - b.mul(quotient[n - k], self.x_order)
            quotient.append(acc.mul(head_inverse, self.x_order))
        return SeriesQx(self.order, self.x_order, tuple(quotient))

    def times_poly(self, c: RatPoly) -> "SeriesQx":
        """Multiply every coefficient by the z-constant ``c``."""
        return SeriesQx(self.order, self.x_order, tuple(a.mul(c, self.x_order) for a in self.coeffs))

    def scale_z(self, c: RatPoly) -> "SeriesQx":
        """Substitute z -> c z: coefficient n is multiplied by c^n."""
        result = []
        power = ONE
        for a in self.coeffs:
            result.append(a.mul(power, self.x_order))
            power = power.mul(c, self.x_order)
        return SeriesQx(self.order, self.x_order, tuple(result))

    def egf_coefficient(self, n: int) -> IntPoly:
        """n! [z^n] as an integer polynomial."""
        return self.coeffs[n].scale(factorial(n)).to_int_poly()


def series_add(a: SeriesQx, b: SeriesQx) -> SeriesQx:
    return a + b


def series_mul(a: SeriesQx, b: SeriesQx) -> SeriesQx:
    return a * b


def series_div(a: SeriesQx, b: SeriesQx) -> SeriesQx:
    return a / b


def scale_z(s: SeriesQx, c: RatPoly) -> SeriesQx:
    return s.scale_z(c)


TRIG_NAMES = ("sin", "cos", "tan", "sec")


def trig_series(name: str, order: int, x_order: Optional[int] = None) -> SeriesQx:
    """
    Maclaurin series of sin, cos, tan or sec cut at z^order.

    tan and sec are obtained by series division of sin and 1 by cos.
    """
    x_order = order + 2 if x_order is None else x_order
    if name == "sin":
        return SeriesQx.from_scalars(
            [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 else 0 for n in range(order + 1)],
            order, x_order)
    if name == "cos":
        return SeriesQx.from_scalars(
            [0 if n % 2 else Fraction((-1) ** (n // 2), factorial(n)) for n in range(order + 1)],
            order, x_order)
    if name == "tan":
        return trig_series("sin", order, x_order) / trig_series("cos", order, x_order)
    if name == "sec":
        return SeriesQx.constant(1, order, x_order) / trig_series("cos", order, x_order)
    raise ValueError(f"unknown trigonometric series {name!r}; expected one of {TRIG_NAMES}")


def egf_from_family(f: Callable[[int], IntPoly], order: int, start: int = 0,
                    x_order: Optional[int] = None) -> SeriesQx:
    """Sum of f(n) z^n / n! for n = start..order."""
    if start not in (0, 1):
        raise ValueError(f"start must be 0 or 1, got {start}")
    x_order = order + 2 if x_order is None else x_order
    coeffs = [RatPoly()] * start
    for n in range(start, order + 1):
        coeffs.append(RatPoly.from_int_poly(f(n)).scale(Fraction(1, factorial(n))))
    return SeriesQx(order, x_order, tuple(coeffs))


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of an exact series comparison."""

    equal: bool
    order: int
    x_order: int
    first_mismatch: Optional[Tuple[int, int]] = None
    left: Optional[Fraction] = None
    right: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.equal


def series_equal(a: SeriesQx, b: SeriesQx) -> SeriesComparison:
    """Compare coefficientwise; report the smallest (z-degree, x-degree) that differs."""
    if (a.order, a.x_order) != (b.order, b.x_order):
        raise SeriesOrderMismatchError(
            f"cannot compare series of orders ({a.order}, {a.x_order}) and ({b.order}, {b.x_order})"
        )
    for n in range(a.order + 1):
        left, right = a.coeffs[n], b.coeffs[n]
        if left != right:
            for k in range(max(len(left.coeffs), len(right.coeffs))):
                if left.coefficient(k) != right.coefficient(k):
                    return SeriesComparison(False, a.order, a.x_order, (n, k),
                                            left.coefficient(k), right.coefficient(k))
    return SeriesComparison(True, a.order, a.x_order)
