"""Independent test oracles.

These deliberately avoid the code paths they check: design strength is
re-derived from raw monomial averages against closed-form sphere moments
(Gamma-function formula, exact rationals), and harmonic dimensions are
re-derived as the kernel dimension of the Laplacian on homogeneous
polynomials.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def sphere_monomial_average(d: int, exponents) -> Fraction:
    """Exact uniform-sphere average of prod_i x_i^{a_i} on S^{d-1}.

    Zero if any exponent is odd; otherwise
    prod_i (a_i - 1)!! / (d (d+2) ... (d + sum(a_i) - 2)).
    """
    if any(a % 2 for a in exponents):
        return Fraction(0)
    total = sum(exponents)
    num = 1
    for a in exponents:
        num *= double_factorial(a - 1)
    den = 1
    for j in range(total // 2):
        den *= d + 2 * j
    return Fraction(num, den)


def _exponent_vectors(d: int, degree: int):
    """All exponent vectors of the given total degree in d variables."""
    for combo in itertools.combinations_with_replacement(range(d), degree):
        exps = [0] * d
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def monomial_strength(points: np.ndarray, kmax: int, tol: float = 1e-9) -> int:
    """Largest t <= kmax such that for every monomial m of degree <= t the
    point average of m equals the sphere average within tol."""
    points = np.asarray(points, dtype=float)
    d = points.shape[1]
    for k in range(1, kmax + 1):
        for exps in _exponent_vectors(d, k):
            vals = np.ones(points.shape[0])
            for i, a in enumerate(exps):
                if a:
                    vals = vals * points[:, i] ** a
            diff = vals.mean() - float(sphere_monomial_average(d, exps))
            if abs(diff) > tol:
                return k - 1
    return kmax


def _monomial_basis(d: int, degree: int):
    return list(_exponent_vectors(d, degree))


def harmonic_dimension_oracle(d: int, k: int) -> int:
    """dim ker(Laplacian) on homogeneous degree-k polynomials in d vars,
    via the rank of the Laplacian matrix in the monomial basis."""
    if k < 2:
        return 1 if k == 0 else d
    src = _monomial_basis(d, k)
    dst = _monomial_basis(d, k - 2)
    dst_index = {e: i for i, e in enumerate(dst)}
    lap = np.zeros((len(dst), len(src)))
    for j, exps in enumerate(src):
        for i, a in enumerate(exps):
            if a >= 2:
                lowered = list(exps)
                lowered[i] -= 2
                lap[dst_index[tuple(lowered)], j] += a * (a - 1)
    return len(src) - np.linalg.matrix_rank(lap)
