# Exact polynomial and truncated series arithmetic
from .polyring import IntPoly
from .series import RatPoly, SeriesQx

__all__ = ['IntPoly', 'RatPoly', 'SeriesQx']
