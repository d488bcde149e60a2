"""Exact integer/rational arithmetic primitives.

Every feasibility decision in this package is made here or on top of what
is here: unbounded integers, rationals in lowest terms, exact integer and
rational square roots, and exact comparison of a rational against a
quadratic surd a + sqrt(b).  No floating point enters any verdict.

``BigRational`` is ``fractions.Fraction``: it already guarantees lowest
terms, a positive denominator, and closed exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

BigRational = Fraction

RationalLike = Union[int, Fraction]

LESS, EQUAL, GREATER = -1, 0, 1


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int/Fraction (or exact string like '3/4') to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def sign(x: RationalLike) -> int:
    """Exact sign of a rational: -1, 0 or +1."""
    if x > 0:
        return GREATER
    if x < 0:
        return LESS
    return EQUAL


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b > a.

    Both arguments must be nonnegative; results are unbounded integers.
    """
    if a < 0 or b < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({a}, {b})")
    if b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class SqrtResult:
    """Floor integer square root together with an exactness flag."""

    floor_root: int
    is_exact: bool


def int_sqrt(x: int) -> SqrtResult:
    """Floor square root of a nonnegative integer, flagged exact for squares."""
    if x < 0:
        raise ValueError(f"int_sqrt requires x >= 0, got {x}")
    r = math.isqrt(x)
    return SqrtResult(r, r * r == x)


def rational_sqrt(x: RationalLike) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational.

    Present exactly when both numerator and denominator (in lowest terms)
    are perfect squares.
    """
    x = as_rational(x)
    if x < 0:
        raise ValueError(f"rational_sqrt requires x >= 0, got {x}")
    rn = math.isqrt(x.numerator)
    if rn * rn != x.numerator:
        return None
    rd = math.isqrt(x.denominator)
    if rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def cmp_surd(q: RationalLike, a: RationalLike, b: RationalLike) -> int:
    """Exact sign of q - (a + sqrt(b)) for rationals q, a and b >= 0.

    Decided by case analysis on sign(q - a) followed by comparison of
    (q - a)^2 against b; never touches floating point.
    """
    q, a, b = as_rational(q), as_rational(a), as_rational(b)
    if b < 0:
        raise ValueError(f"cmp_surd requires b >= 0, got b = {b}")
    diff = q - a
    if b == 0:
        return sign(diff)
    if diff <= 0:
        # sqrt(b) > 0 >= diff
        return LESS
    return sign(diff * diff - b)


def is_integer(x: RationalLike) -> bool:
    """True iff the rational is an integer."""
    return as_rational(x).denominator == 1
