"""Strongly-regular-graph parameter arithmetic: spectrum, multiplicities,
Krein conditions, the standard counting identity and conference-graph
detection.

Parameters are carried as rationals (not integers) so that a derived
parameter like mu = a/2 failing to be integral can be *reported* as an
infeasibility witness instead of blowing up at construction time.

Graphs derived from equiangular tight frames can have irrational degree
and spectrum living in a quadratic field Q[sqrt(m)].  ``QuadSurd`` is an
exact value (p + q*sqrt(m))/r over integers; all spectrum/Krein formulas
run unchanged on it, and signs of Krein values are decided exactly even
on the boundary where they vanish.  Two surds combine only when they
carry the same radicand m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .arith import is_integer, rational_sqrt, sign

Value = Union[Fraction, "QuadSurd"]
ValueLike = Union[int, Fraction, "QuadSurd"]


class QuadSurd:
    """Exact (p + q*sqrt(m))/r with integer p, q, r, m; r > 0, q != 0,
    m > 0 and not a perfect square (rational results collapse to Fraction
    in :func:`make_surd`)."""

    __slots__ = ("p", "q", "r", "m")

    def __init__(self, p: int, q: int, r: int, m: int):
        self.p = p
        self.q = q
        self.r = r
        self.m = m

    # -- construction -------------------------------------------------

    @staticmethod
    def from_parts(rat: ValueLike, coef: ValueLike, m: int) -> Value:
        """rat + coef*sqrt(m) for rational rat, coef."""
        rat, coef = Fraction(rat), Fraction(coef)
        r = rat.denominator * coef.denominator
        return make_surd(
            rat.numerator * coef.denominator,
            coef.numerator * rat.denominator,
            r,
            m,
        )

    def _parts_of(self, other: ValueLike) -> Tuple[int, int, int]:
        if isinstance(other, QuadSurd):
            if other.m != self.m:
                raise ValueError(
                    f"cannot combine surds over different radicands "
                    f"{self.m} and {other.m}"
                )
            return other.p, other.q, other.r
        if isinstance(other, int):
            return other, 0, 1
        return other.numerator, 0, other.denominator

    # -- ring/field operations ----------------------------------------
    # the radicand of a live surd is already known non-square, so the
    # arithmetic paths use _combine and skip make_surd's isqrt test

    def __add__(self, other):
        p2, q2, r2 = self._parts_of(other)
        return _combine(
            self.p * r2 + p2 * self.r, self.q * r2 + q2 * self.r, self.r * r2, self.m
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.r, self.m)

    def __sub__(self, other):
        p2, q2, r2 = self._parts_of(other)
        return _combine(
            self.p * r2 - p2 * self.r, self.q * r2 - q2 * self.r, self.r * r2, self.m
        )

    def __rsub__(self, other):
        p2, q2, r2 = self._parts_of(other)
        return _combine(
            p2 * self.r - self.p * r2, q2 * self.r - self.q * r2, self.r * r2, self.m
        )

    def __mul__(self, other):
        p2, q2, r2 = self._parts_of(other)
        return _combine(
            self.p * p2 + self.q * q2 * self.m,
            self.p * q2 + self.q * p2,
            self.r * r2,
            self.m,
        )

    __rmul__ = __mul__

    def _inverse(self) -> Value:
        den = self.p * self.p - self.q * self.q * self.m
        return _combine(self.r * self.p, -self.r * self.q, den, self.m)

    def __truediv__(self, other):
        if isinstance(other, QuadSurd):
            return self * other._inverse()
        p2, _, r2 = self._parts_of(other)
        return _combine(self.p * r2, self.q * r2, self.r * p2, self.m)

    def __rtruediv__(self, other):
        return self._inverse() * other

    # -- exact comparisons --------------------------------------------

    def sign(self) -> int:
        # r > 0, q != 0, m not a perfect square
        if self.p == 0:
            return 1 if self.q > 0 else -1
        if self.p > 0 and self.q > 0:
            return 1
        if self.p < 0 and self.q < 0:
            return -1
        lhs, rhs = self.p * self.p, self.q * self.q * self.m
        # p^2 = q^2 m impossible: m is not a square
        if self.p > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            # rational + irrational decomposition is unique, so compare the
            # two parts; works across radicand representations (2*sqrt(2)
            # equals sqrt(8))
            if self.p * other.r != other.p * self.r:
                return False
            if (self.q > 0) != (other.q > 0):
                return False
            return (
                self.q * self.q * self.m * other.r * other.r
                == other.q * other.q * other.m * self.r * self.r
            )
        if isinstance(other, (int, Fraction)):
            return False  # a genuine surd is irrational
        return NotImplemented

    def __hash__(self):
        raise TypeError("QuadSurd is not hashable")

    def _cmp(self, other) -> int:
        diff = self - other
        return value_sign(diff)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.m)) / self.r

    def __repr__(self) -> str:
        return f"({self.p} + {self.q}*sqrt({self.m}))/{self.r}"


def _combine(p: int, q: int, r: int, m: int) -> Value:
    """Normalize (p + q*sqrt(m))/r for a radicand m already known to be a
    positive non-square."""
    if q == 0:
        return Fraction(p, r)
    if r == 0:
        raise ZeroDivisionError("surd denominator is zero")
    if r < 0:
        p, q, r = -p, -q, -r
    g = math.gcd(math.gcd(p, q), r)
    if g > 1:
        p, q, r = p // g, q // g, r // g
    return QuadSurd(p, q, r, m)


def make_surd(p: int, q: int, r: int, m: int) -> Value:
    """Normalize (p + q*sqrt(m))/r, collapsing rational values to Fraction."""
    if r == 0:
        raise ZeroDivisionError("surd denominator is zero")
    if q == 0 or m == 0:
        return Fraction(p, r)
    if m < 0:
        raise ValueError(f"negative radicand {m}")
    s = math.isqrt(m)
    if s * s == m:
        return Fraction(p + q * s, r)
    return _combine(p, q, r, m)


def value_sign(x: ValueLike) -> int:
    """Exact sign of a Fraction/int/QuadSurd."""
    if isinstance(x, QuadSurd):
        return x.sign()
    return sign(Fraction(x))


def value_is_rational(x: ValueLike) -> bool:
    return not isinstance(x, QuadSurd)


def value_float(x: ValueLike) -> float:
    return float(x)


def _sqrt_value(x: Fraction, field_m: int = 0) -> Value:
    """Exact square root of a nonnegative rational, expressed either as a
    Fraction, as coef*sqrt(field_m) when that lands in the ambient field,
    or as a fresh surd otherwise."""
    if x < 0:
        raise ValueError(f"square root of negative value {x}")
    root = rational_sqrt(x)
    if root is not None:
        return root
    if field_m:
        ratio = rational_sqrt(x / field_m)
        if ratio is not None:
            return QuadSurd.from_parts(0, ratio, field_m)
    # sqrt(a/b) = sqrt(a*b)/b
    return make_surd(0, 1, x.denominator, x.numerator * x.denominator)


# -- parameter containers ---------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular-graph parameter tuple (v, k, lam, mu).

    Entries are rational in the ordinary pipelines; frames with an
    irrational embedding degree produce QuadSurd entries, which every
    operation below handles exactly.
    """

    v: Value
    k: Value
    lam: Value
    mu: Value

    @staticmethod
    def of(v: ValueLike, k: ValueLike, lam: ValueLike, mu: ValueLike) -> "SrgParams":
        conv = lambda x: x if isinstance(x, QuadSurd) else Fraction(x)
        return SrgParams(conv(v), conv(k), conv(lam), conv(mu))

    def as_tuple(self) -> Tuple[Value, Value, Value, Value]:
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class SrgSpectrum:
    """Adjacency eigenvalues r1 > r2 with multiplicities n1, n2 (the
    degree k has multiplicity 1 and is not repeated here)."""

    r1: Value
    r2: Value
    n1: Value
    n2: Value

    @property
    def is_rational(self) -> bool:
        return all(
            value_is_rational(x) for x in (self.r1, self.r2, self.n1, self.n2)
        )


@dataclass(frozen=True)
class SrgConsistency:
    ok: bool
    witnesses: Tuple[str, ...]


# -- operations --------------------------------------------------------


def _field_radicand(p: SrgParams) -> int:
    for x in p.as_tuple():
        if isinstance(x, QuadSurd):
            return x.m
    return 0


def spectrum(p: SrgParams) -> SrgSpectrum:
    """Exact eigenvalues r1 > r2 and multiplicities n1, n2.

    The discriminant (lam-mu)^2 + 4(k-mu) must be positive; a repeated or
    complex eigenvalue is not a strongly regular spectrum and is rejected.
    """
    v, k, lam, mu = p.as_tuple()
    field_m = _field_radicand(p)
    diff = lam - mu
    disc = diff * diff + 4 * (k - mu)
    disc_sign = value_sign(disc)
    if disc_sign < 0:
        raise ValueError(f"negative spectrum discriminant {disc}")
    if disc_sign == 0:
        raise ValueError("repeated adjacency eigenvalue; spectrum is degenerate")
    if isinstance(disc, QuadSurd):
        raise ValueError(
            "spectrum discriminant is itself irrational; outside the "
            "supported quadratic field"
        )
    root = _sqrt_value(disc, field_m)
    r1 = (diff + root) / 2
    r2 = (diff - root) / 2
    trace_term = (2 * k + (v - 1) * diff) / root
    n1 = (v - 1 - trace_term) / 2
    n2 = (v - 1 + trace_term) / 2
    return SrgSpectrum(r1, r2, n1, n2)


def krein(p: SrgParams) -> Tuple[Value, Value]:
    """The two Krein values; both must be >= 0 for a graph to exist.

    K1 = (k+r1)(r2+1)^2 - (r1+1)(k+r1+2*r1*r2)
    K2 = the same expression with r1 and r2 exchanged.

    Exact for rational and quadratic-surd spectra alike.
    """
    k = p.k
    s = spectrum(p)
    r1, r2 = s.r1, s.r2

    def one_side(ra, rb):
        t = rb + 1
        return (k + ra) * t * t - (ra + 1) * (k + ra + 2 * r1 * r2)

    return one_side(r1, r2), one_side(r2, r1)


def consistency_check(p: SrgParams) -> SrgConsistency:
    """Standard necessary conditions: the four parameters are nonnegative
    integers with k < v, the counting identity k(k-lam-1) = (v-k-1)mu
    holds, and both eigenvalue multiplicities are nonnegative integers."""
    witnesses: List[str] = []
    names = ("v", "k", "lambda", "mu")
    for name, x in zip(names, p.as_tuple()):
        if not value_is_rational(x):
            witnesses.append(f"{name} = {x} is irrational")
        elif not is_integer(x):
            witnesses.append(f"{name} = {x} is not an integer")
        elif x < 0:
            witnesses.append(f"{name} = {x} is negative")
    if not witnesses:
        v, k, lam, mu = p.as_tuple()
        if not k < v:
            witnesses.append(f"degree k = {k} must be smaller than v = {v}")
        lhs = k * (k - lam - 1)
        rhs = (v - k - 1) * mu
        if lhs != rhs:
            witnesses.append(
                f"counting identity fails: k(k-lambda-1) = {lhs} != {rhs} = (v-k-1)mu"
            )
        if not witnesses:
            try:
                s = spectrum(p)
            except ValueError as exc:
                witnesses.append(str(exc))
            else:
                for name, x in (("n1", s.n1), ("n2", s.n2)):
                    if not value_is_rational(x):
                        witnesses.append(f"multiplicity {name} = {x} is irrational")
                    elif not is_integer(x) or x < 0:
                        witnesses.append(
                            f"multiplicity {name} = {x} is not a nonnegative integer"
                        )
    return SrgConsistency(not witnesses, tuple(witnesses))


def is_conference(p: SrgParams) -> bool:
    """True iff the parameters match (n, (n-1)/2, (n-5)/4, (n-1)/4)."""
    v, k, lam, mu = p.as_tuple()
    if not all(value_is_rational(x) for x in p.as_tuple()):
        return False
    return (
        k == Fraction(v - 1, 2)
        and lam == Fraction(v - 5, 4)
        and mu == Fraction(v - 1, 4)
    )
