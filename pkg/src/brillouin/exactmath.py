"""Directed-rounding rational constants and integer square-root helpers.

Everything downstream that must never overstate a guarantee (reliability
bounds, default clip sizes) goes through the one-sided constants here instead
of floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

_SCALE = 10**18

# One-ulp brackets at 18 decimal digits.  The sqrt(2) pair is provable by
# squaring; the pi pair is pinned against an independent oracle in the tests.
PI_LO = Fraction(3141592653589793238, _SCALE)
PI_HI = Fraction(3141592653589793239, _SCALE)
SQRT2_LO = Fraction(1414213562373095048, _SCALE)
SQRT2_HI = Fraction(1414213562373095049, _SCALE)


def floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def largest_int_below(x: Fraction) -> int:
    """Largest integer strictly less than x."""
    return (x.numerator - 1) // x.denominator


def sqrt_bounds(x: Fraction, digits: int = 30) -> tuple[Fraction, Fraction]:
    """Rational bracket lo <= sqrt(x) <= hi with hi - lo = 10**-digits."""
    if x < 0:
        raise ValueError("sqrt_bounds needs a nonnegative argument")
    s = 10**digits
    t = isqrt(x.numerator * s * s // x.denominator)
    return Fraction(t, s), Fraction(t + 1, s)


def sqrt_midpoint(x: Fraction, digits: int = 30) -> Fraction:
    """Rational approximation of sqrt(x) good to 10**-digits."""
    lo, hi = sqrt_bounds(x, digits)
    return (lo + hi) / 2
