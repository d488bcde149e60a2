"""Gegenbauer polynomials, harmonic-space dimensions and exact expansions.

Conventions used throughout the package:

* ``harm_dim(d, k)`` is the dimension h_k of the space of homogeneous
  harmonic polynomials of degree k in d variables.
* ``gegenbauer_poly(d, k)`` is the degree-k Gegenbauer polynomial for the
  sphere in R^d normalized so that its value at 1 equals h_k.  It is
  generated by the three-term recursion

      G_0 = 1,   G_1 = d*x,
      (k+1)/(d+2k) * G_{k+1} = x*G_k - (d+k-3)/(d+2k-4) * G_{k-1}.

  The recursion coefficient degenerates to 0/0 at d = 2, k = 1; it is
  taken as 1 there (its limit in d), which reproduces the Chebyshev
  identity G_k(cos t) = 2 cos(kt) for d = 2.

Expansion into this basis is done by exact leading-coefficient deflation,
so rational polynomials expand with rational coefficients and no
quadrature is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .arith import binomial

Coeff = Union[int, Fraction, float]


def _trim(coeffs: Sequence[Coeff]) -> tuple:
    last = -1
    for i, c in enumerate(coeffs):
        if c != 0:
            last = i
    return tuple(coeffs[: last + 1])


class Polynomial:
    """Univariate polynomial, coefficients indexed by degree.

    Coefficients are exact (int/Fraction) or float; mixed inputs degrade
    to float.  Trailing zeros are never stored, so ``degree`` is the true
    degree (-1 for the zero polynomial).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    @property
    def leading(self) -> Coeff:
        if self.is_zero:
            return 0
        return self.coeffs[-1]

    def __call__(self, x):
        """Horner evaluation; exact for exact coefficients and rational x.

        Numpy arrays are evaluated elementwise in double precision.
        """
        coeffs = self.coeffs
        if hasattr(x, "dtype"):
            coeffs = self.float_coeffs()
        acc = 0 * x
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def scale(self, c: Coeff) -> "Polynomial":
        return Polynomial([c * a for a in self.coeffs])

    def shift_degree(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def float_coeffs(self) -> list:
        return [float(c) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def harm_dim(d: int, k: int) -> int:
    """Dimension h_k of degree-k harmonic homogeneous polynomials in R^d."""
    if d < 2:
        raise ValueError(f"harm_dim requires d >= 2, got d = {d}")
    if k < 0:
        raise ValueError(f"harm_dim requires k >= 0, got k = {k}")
    if k == 0:
        return 1
    if k == 1:
        return d
    return binomial(d + k - 1, k) - binomial(d + k - 3, k - 2)


@lru_cache(maxsize=None)
def gegenbauer_poly(d: int, k: int) -> Polynomial:
    """Exact Gegenbauer polynomial of degree k, normalized to h_k at 1."""
    if d < 2:
        raise ValueError(f"gegenbauer_poly requires d >= 2, got d = {d}")
    if k < 0:
        raise ValueError(f"gegenbauer_poly requires k >= 0, got k = {k}")
    if k == 0:
        return Polynomial([1])
    if k == 1:
        return Polynomial([0, d])
    prev2 = gegenbauer_poly(d, k - 2)
    prev1 = gegenbauer_poly(d, k - 1)
    j = k - 1  # recursion step producing degree j+1
    if d == 2 and j == 1:
        back = Fraction(1)  # 0/0 in the recursion; limit in d is 1
    else:
        back = Fraction(d + j - 3, d + 2 * j - 4)
    lead = Fraction(d + 2 * j, j + 1)
    return (prev1.shift_degree(1) - prev2.scale(back)).scale(lead)


def gegenbauer_eval(d: int, k: int, x):
    """Value of the normalized Gegenbauer polynomial at x.

    Exact for int/Fraction x, double precision for float (or numpy) x.
    """
    poly = gegenbauer_poly(d, k)
    if isinstance(x, (int, Fraction)):
        return poly(Fraction(x))
    return Polynomial(poly.float_coeffs())(x)


@dataclass(frozen=True)
class GegenbauerExpansion:
    """Coefficients f_0..f_m with p(x) = sum_k f_k * G_k^{(d)}(x)."""

    dimension: int
    coeffs: tuple

    def coeff(self, k: int) -> Coeff:
        return self.coeffs[k] if k < len(self.coeffs) else 0

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def reconstruct(self) -> Polynomial:
        out = Polynomial([])
        for k, f in enumerate(self.coeffs):
            if f != 0:
                out = out + gegenbauer_poly(self.dimension, k).scale(f)
        return out


def gegenbauer_expand(p: Polynomial, d: int) -> GegenbauerExpansion:
    """Expand p in the Gegenbauer basis by leading-term deflation.

    Exact whenever p has exact coefficients; reconstruction returns p.
    """
    if d < 2:
        raise ValueError(f"gegenbauer_expand requires d >= 2, got d = {d}")
    if p.is_zero:
        return GegenbauerExpansion(d, ())
    coeffs: list = [0] * (p.degree + 1)
    rem = p
    while not rem.is_zero:
        k = rem.degree
        g = gegenbauer_poly(d, k)
        lead = rem.leading
        if isinstance(lead, int):
            lead = Fraction(lead)  # keep int/int division exact
        f = lead / g.leading
        coeffs[k] = f
        rem = rem - g.scale(f)
        if not rem.is_zero and rem.degree >= k:
            raise AssertionError("deflation failed to reduce the degree")
    return GegenbauerExpansion(d, _trim(coeffs))


def annihilator(angles: Iterable[Coeff], exact: bool = True) -> Polynomial:
    """prod_{a in angles} (x - a)/(1 - a), the polynomial that is 1 at 1
    and vanishes on the given angle set.

    Exact when every angle is rational and ``exact`` is left on; float
    angles produce a float-coefficient polynomial.
    """
    angle_list = list(angles)
    if not angle_list:
        raise ValueError("annihilator requires a nonempty angle set")
    out = Polynomial([1])
    for a in angle_list:
        if a == 1:
            raise ValueError("annihilator is undefined for angle 1")
        if exact and isinstance(a, (int, Fraction)):
            a = Fraction(a)
            out = out * Polynomial([-a, 1]).scale(Fraction(1) / (1 - a))
        else:
            a = float(a)
            out = out * Polynomial([-a / (1.0 - a), 1.0 / (1.0 - a)])
    return out
