"""
Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficient k is the coefficient of x^k; trailing zeros are stripped so the
zero polynomial has no coefficients.
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, Tuple, Union

from exceptions import DegreeOverflowError, InexactDivisionError


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def binomial_power(cls, k: int, sign: int = 1) -> "IntPoly":
        """(1 + sign*x)^k."""
        return cls(tuple(comb(k, j) * sign ** j for j in range(k + 1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def padded(self, length: int) -> Tuple[int, ...]:
        """Coefficients extended with zeros to ``length`` entries."""
        if length < len(self.coeffs):
            raise ValueError(f"degree {self.degree} does not fit {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return IntPoly(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def evaluate(self, value: int) -> int:
        """Horner evaluation at an integer."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return a - b


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def scale(a: IntPoly, c: int) -> IntPoly:
    return a.scale(c)


def derivative(a: IntPoly) -> IntPoly:
    return a.derivative()


def evaluate_at_integer(a: IntPoly, value: int) -> int:
    return a.evaluate(value)


def total(polys: Iterable[IntPoly]) -> IntPoly:
    result = IntPoly()
    for p in polys:
        result = result + p
    return result


def _homogenized(P: IntPoly, m: int, top: int, bottom: int) -> IntPoly:
    # sum_k p_k (1 + top*x)^k (1 + bottom*x)^(m-k)
    if P.degree > m:
        raise DegreeOverflowError(f"degree {P.degree} exceeds homogenization degree {m}")
    result = IntPoly()
    for k, c in enumerate(P.coeffs):
        if c:
            term = IntPoly.binomial_power(k, top) * IntPoly.binomial_power(m - k, bottom)
            result = result + term.scale(c)
    return result


def mobius_hom_sub(P: IntPoly, m: int) -> IntPoly:
    """(1-x)^m P((1+x)/(1-x)) as a polynomial; requires deg P <= m."""
    return _homogenized(P, m, 1, -1)


def inverse_mobius_hom_sub(P: IntPoly, m: int) -> IntPoly:
    """(1+x)^m P((x-1)/(x+1)); composing with mobius_hom_sub multiplies by 2^m."""
    if P.degree > m:
        raise DegreeOverflowError(f"degree {P.degree} exceeds homogenization degree {m}")
    result = IntPoly()
    for k, c in enumerate(P.coeffs):
        if c:
            # (x - 1)^k = (-1)^k (1 - x)^k
            term = IntPoly.binomial_power(k, -1) * IntPoly.binomial_power(m - k, 1)
            result = result + term.scale(c * (-1) ** k)
    return result


def reciprocal_transform(P: IntPoly, n: int) -> IntPoly:
    """x^n P(1/x): reverse the coefficients inside the window [0, n]."""
    if P.degree > n:
        raise DegreeOverflowError(f"degree {P.degree} exceeds the reversal window {n}")
    return IntPoly(tuple(reversed(P.padded(n + 1))))


def exact_divide(P: IntPoly, D: IntPoly) -> IntPoly:
    """
    Quotient Q with P = D * Q over the integers.

    Raises:
        ZeroDivisionError: D is the zero polynomial.
        InexactDivisionError: D does not divide P in Z[x].
    """
    if D.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    remainder = list(P.coeffs)
    lead = D.coeffs[-1]
    if len(remainder) < len(D.coeffs):
        if remainder:
            raise InexactDivisionError(f"({P}) is not divisible by ({D})")
        return IntPoly()
    quotient = [0] * (len(remainder) - len(D.coeffs) + 1)
    for shift in range(len(quotient) - 1, -1, -1):
        top = remainder[shift + len(D.coeffs) - 1]
        if top % lead:
            raise InexactDivisionError(f"({P}) / ({D}): leading coefficient {top} not divisible by {lead}")
        q = top // lead
        quotient[shift] = q
        if q:
            for j, d in enumerate(D.coeffs):
                remainder[shift + j] -= q * d
    if any(remainder):
        raise InexactDivisionError(f"({P}) / ({D}) leaves remainder {IntPoly(tuple(remainder))}")
    return IntPoly(tuple(quotient))


def exact_divide_scalar(P: IntPoly, c: int) -> IntPoly:
    """P / c with every coefficient divisible by c."""
    if c == 0:
        raise ZeroDivisionError("division by zero")
    if any(a % c for a in P.coeffs):
        raise InexactDivisionError(f"({P}) is not divisible by {c}")
    return IntPoly(tuple(a // c for a in P.coeffs))
