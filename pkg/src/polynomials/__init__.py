# Derivative polynomials and alternating Eulerian polynomials
from .derivative import DerivativePolynomialTable, p_poly, q_poly
from .descent_sets import DescentSetTable
from .alternating import Route, compute

__all__ = ['DerivativePolynomialTable', 'p_poly', 'q_poly', 'DescentSetTable', 'Route', 'compute']
