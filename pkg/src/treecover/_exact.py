"""Exact integer and rational helpers.

Every formula in the package mixes floors and ceilings of rationals, some of
them signed, so nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for integers, any signs, b != 0."""
    if b == 0:
        raise ZeroDivisionError("ceil_div by zero")
    return -((-a) // b)


def floor_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("floor_div by zero")
    return a // b


def ceil_q(x: Rational | int) -> int:
    """Ceiling of an exact rational."""
    q = Fraction(x)
    return -((-q.numerator) // q.denominator)


def floor_q(x: Rational | int) -> int:
    q = Fraction(x)
    return q.numerator // q.denominator
