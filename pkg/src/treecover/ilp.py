"""Closed-form minima of two small integer programs, with achieving witnesses.

Both minimise ``x + y1 + y2 + z`` over non-negative integers.

Program 1, for ``A <= B`` and ``(d-2)B <= (d-1)A``::

    (d-2)x + (d-1)(y1 + y2) + dz >= A
    (d-1)(x + y1) >= B,  (d-1)(x + y2) >= B

Program 2::

    (d-2)x + (d-1)(y1 + y2 + z) >= (d-1)A
    (d-1)(x + y1) >= dA,  (d-1)(x + y2) >= dA
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._exact import ceil_div, ceil_q
from .errors import PreconditionError

Witness = tuple[int, int, int, int]


@dataclass(frozen=True)
class IlpSolution:
    value: int
    witness: Witness


def program1_feasible(A: int, B: int, d: int, w: Witness) -> bool:
    x, y1, y2, z = w
    return (
        (d - 2) * x + (d - 1) * (y1 + y2) + d * z >= A
        and (d - 1) * (x + y1) >= B
        and (d - 1) * (x + y2) >= B
    )


def program2_feasible(A: int, d: int, w: Witness) -> bool:
    x, y1, y2, z = w
    return (
        (d - 2) * x + (d - 1) * (y1 + y2 + z) >= (d - 1) * A
        and (d - 1) * (x + y1) >= d * A
        and (d - 1) * (x + y2) >= d * A
    )


def ilp_min_sum(A: int, B: int, d: int) -> IlpSolution:
    """``ceil(A/d + (2/d) ceil(B/(d-1)))`` with witness ``(ceil(B/(d-1)), 0, 0, z)``."""
    if A < 1 or B < 1 or d < 2:
        raise PreconditionError("need A, B >= 1 and d >= 2")
    if A > B or (d - 2) * B > (d - 1) * A:
        raise PreconditionError("need A <= B and (d-2)B <= (d-1)A")
    x = ceil_div(B, d - 1)
    z = ceil_div(A - x * (d - 2), d)
    value = ceil_q(Fraction(A, d) + Fraction(2 * x, d))
    w = (x, 0, 0, z)
    if z < 0 or not program1_feasible(A, B, d, w) or sum(w) != value:
        raise AssertionError(f"witness {w} does not attain {value}")
    return IlpSolution(value, w)


def ilp2_split(A: int, d: int) -> tuple[int, int]:
    """The optimal ``(x, y)`` with ``y1 = y2 = y`` and ``z = 0``."""
    r = A % (d * (d - 1))
    if r < (d - 1) * (d - 2):
        y = A // (d * (d - 1))
        x = ceil_q(Fraction((d - 1) * A - (2 * d - 2) * y, d - 2))
    else:
        y = ceil_div(A, d * (d - 1))
        x = ceil_q(Fraction(d * A, d - 1) - y)
    return x, y


def ilp2_formula(A: int, d: int) -> int:
    r = A % (d * (d - 1))
    if r < (d - 1) * (d - 2):
        return ceil_q(Fraction(d - 1, d - 2) * A - Fraction(2, d - 2) * (A // (d * (d - 1))))
    return ceil_q(Fraction(d, d - 1) * A + ceil_div(A, d * (d - 1)))


def ilp2_min_sum(A: int, d: int) -> IlpSolution:
    """Two-branch closed form on ``r = A mod d(d-1)`` with witness ``(x, y, y, 0)``."""
    if A < 1 or d < 2:
        raise PreconditionError("need A >= 1 and d >= 2")
    x, y = ilp2_split(A, d)
    w = (x, y, y, 0)
    value = ilp2_formula(A, d)
    if not program2_feasible(A, d, w) or sum(w) != value:
        raise AssertionError(f"witness {w} does not attain {value}")
    return IlpSolution(value, w)
