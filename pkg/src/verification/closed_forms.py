"""
Closed-form right-hand sides of the generating-function identities.

Every builder takes the z-order N and the x-truncation order and returns a
SeriesQx; the left-hand sides are assembled from polynomial families with
egf_from_family.
"""

from algebra.series import RatPoly, SeriesQx, trig_series

X = RatPoly.x()
ONE_MINUS_X = RatPoly((1, -1))
X_MINUS_ONE = RatPoly((-1, 1))
X_PLUS_ONE = RatPoly((1, 1))


def _one(order: int, x_order: int) -> SeriesQx:
    return SeriesQx.constant(1, order, x_order)


def hoffman_tan(order: int, x_order: int) -> SeriesQx:
    """(sin z + x cos z) / (cos z - x sin z)."""
    sin, cos = trig_series("sin", order, x_order), trig_series("cos", order, x_order)
    return (sin + cos.times_poly(X)) / (cos - sin.times_poly(X))


def hoffman_sec(order: int, x_order: int) -> SeriesQx:
    """1 / (cos z - x sin z)."""
    sin, cos = trig_series("sin", order, x_order), trig_series("cos", order, x_order)
    return _one(order, x_order) / (cos - sin.times_poly(X))


def alternating_a(order: int, x_order: int) -> SeriesQx:
    """(T - 1) / (1 - x T) with T = sec((1-x)z) + tan((1-x)z)."""
    t = (trig_series("sec", order, x_order) + trig_series("tan", order, x_order)).scale_z(ONE_MINUS_X)
    one = _one(order, x_order)
    return (t - one) / (one - t.times_poly(X))


def alternating_b(order: int, x_order: int) -> SeriesQx:
    """(x-1) / ((x-1) cos(z(1-x)) + (x+1) sin(z(1-x)))."""
    sin = trig_series("sin", order, x_order).scale_z(ONE_MINUS_X)
    cos = trig_series("cos", order, x_order).scale_z(ONE_MINUS_X)
    numerator = SeriesQx.constant(X_MINUS_ONE, order, x_order)
    return numerator / (cos.times_poly(X_MINUS_ONE) + sin.times_poly(X_PLUS_ONE))


def alternating_b_minus(order: int, x_order: int) -> SeriesQx:
    """(cos(z(x-1)) + sin(z(x-1)) - 1) / ((x-1) cos(z(x-1)) - (x+1) sin(z(x-1)))."""
    sin = trig_series("sin", order, x_order).scale_z(X_MINUS_ONE)
    cos = trig_series("cos", order, x_order).scale_z(X_MINUS_ONE)
    return (cos + sin - _one(order, x_order)) / (cos.times_poly(X_MINUS_ONE) - sin.times_poly(X_PLUS_ONE))


def euler(order: int, x_order: int) -> SeriesQx:
    """tan z + sec z."""
    return trig_series("tan", order, x_order) + trig_series("sec", order, x_order)


def snakes(order: int, x_order: int) -> SeriesQx:
    """1 / (cos z - sin z)."""
    sin, cos = trig_series("sin", order, x_order), trig_series("cos", order, x_order)
    return _one(order, x_order) / (cos - sin)
