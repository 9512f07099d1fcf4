"""
Exception hierarchy for the alternating descent toolkit.

Size preconditions (negative n, n = 0 where a definition starts at 1) raise
plain ValueError; everything below signals a failed route or a bad input file.
"""

from typing import Optional


class AltdescError(Exception):
    """Base class for all toolkit errors."""


class EnumerationBoundError(AltdescError):
    """An exhaustive route was asked for a size above its enumeration bound."""

    def __init__(self, family: str, n: int, bound: int, hint: Optional[str] = None):
        self.family = family
        self.n = n
        self.bound = bound
        message = f"{family}: n={n} exceeds the enumeration bound {bound}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)


class InexactDivisionError(AltdescError, ArithmeticError):
    """An exact division left a remainder."""

    def __init__(self, message: str, n: Optional[int] = None):
        self.n = n
        super().__init__(message)


class DegreeOverflowError(AltdescError, ValueError):
    """A polynomial does not fit the degree window of a substitution or reversal."""

    def __init__(self, message: str, n: Optional[int] = None):
        self.n = n
        super().__init__(message)


class SeriesInversionError(AltdescError, ArithmeticError):
    """A series or polynomial without an invertible constant term was inverted."""


class SeriesOrderMismatchError(AltdescError):
    """Two truncated series of different orders were compared or combined."""


class CacheFormatError(AltdescError):
    """A table cache file could not be parsed."""


class UnknownCheckError(AltdescError):
    """A verification id is not in the catalog."""

    def __init__(self, check_id: str):
        self.check_id = check_id
        super().__init__(f"unknown check id: {check_id!r}")
