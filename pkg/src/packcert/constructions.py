"""Built-in generators for the extremal witness configurations: the
regular simplex frame, the cross-polytope, the icosahedron, the 240
shortest vectors of the E8 lattice, and derived codes (the subset of a
set orthogonal to a chosen point, re-expressed one dimension down).

Each generator engages the strongest exactness mode its coordinates
allow: rational coordinates give exact mode, a common irrational scale or
a Gram matrix known by construction gives gram-exact mode, genuinely
irrational angle data stays float.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Optional

import numpy as np

from .pointset import DEFAULT_TOL, PointSet, is_antipodal


def _householder_to_e1(x: np.ndarray) -> np.ndarray:
    """Orthogonal matrix H with H x = +-e_1 (sign chosen for stability)."""
    d = x.shape[0]
    e1 = np.zeros(d)
    e1[0] = 1.0
    sign = -1.0 if x[0] >= 0 else 1.0
    u = x - sign * e1
    nu = np.dot(u, u)
    if nu < 1e-30:
        return np.eye(d)
    return np.eye(d) - 2.0 * np.outer(u, u) / nu


def simplex_etf(d: int, tolerance: float = DEFAULT_TOL) -> PointSet:
    """d+1 unit vectors in R^d with constant pairwise inner product -1/d:
    the vertices of a regular simplex, the smallest nontrivial
    equiangular tight frame."""
    if d < 2:
        raise ValueError(f"simplex_etf requires d >= 2, got d = {d}")
    m = d + 1
    centered = np.eye(m) - np.full((m, m), 1.0 / m)
    scale = math.sqrt(d / m)  # |e_i - centroid|
    verts = centered / scale
    ones_dir = np.full(m, 1.0 / math.sqrt(m))
    rot = _householder_to_e1(ones_dir)
    coords = (verts @ rot.T)[:, 1:]  # vertices live in the hyperplane 1^perp
    gram_ints = (d + 1) * np.eye(m, dtype=np.int64) - np.ones((m, m), dtype=np.int64)
    return PointSet.with_known_gram(coords, gram_ints, d, tolerance)


def cross_polytope(d: int, tolerance: float = DEFAULT_TOL) -> PointSet:
    """The 2d vectors {+-e_i}: an antipodal two-distance set with angle
    set {0, -1}, tight for the absolute bound at s = 2."""
    if d < 2:
        raise ValueError(f"cross_polytope requires d >= 2, got d = {d}")
    rows = []
    for i in range(d):
        for s in (1, -1):
            row = [Fraction(0)] * d
            row[i] = Fraction(s)
            rows.append(row)
    return PointSet.from_rational(rows, tolerance=tolerance)


def icosahedron(tolerance: float = DEFAULT_TOL) -> PointSet:
    """The 12 icosahedron vertices: cyclic shifts of (0, +-1, +-phi)
    normalized, phi the golden ratio.  Angle set {-1, +-1/sqrt(5)}."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    scale = 1.0 / math.sqrt(1.0 + phi * phi)
    pts = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            base = (0.0, s1, s2 * phi)
            for shift in range(3):
                pts.append([base[(i - shift) % 3] * scale for i in range(3)])
    return PointSet.from_floats(pts, tolerance)


def e8_roots(tolerance: float = DEFAULT_TOL) -> PointSet:
    """The 240 minimal vectors of the E8 lattice, normalized to unit
    length: 112 with two nonzero entries +-1 and 128 of the form
    (+-1/2, ..., +-1/2) with an even number of minus signs, all scaled by
    1/sqrt(2).  Every pairwise inner product lies in {0, +-1/2, +-1}, so
    the Gram matrix is exact."""
    rows = []
    for i, j in itertools.combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                row = [Fraction(0)] * 8
                row[i], row[j] = Fraction(si), Fraction(sj)
                rows.append(row)
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            rows.append([half * s for s in signs])
    return PointSet.from_rational(rows, scale_sq=2, tolerance=tolerance)


def derived_code(ps: PointSet, index: int, tolerance: Optional[float] = None) -> PointSet:
    """Vectors of an antipodal set orthogonal to the point at ``index``,
    re-expressed in an orthonormal basis of its hyperplane (dimension
    d-1) via a Householder reflection.

    Exactness of the Gram matrix survives: the reflection is an isometry
    and the derived Gram is a submatrix of the original."""
    if not 0 <= index < ps.n:
        raise IndexError(f"index {index} out of range for {ps.n} points")
    if not is_antipodal(ps):
        raise ValueError("derived codes are defined for antipodal sets")
    tol = ps.tolerance if tolerance is None else tolerance
    if ps.exact_gram is not None:
        sel = [j for j in range(ps.n) if j != index and ps.exact_gram.ints[index, j] == 0]
    else:
        sel = [
            j
            for j in range(ps.n)
            if j != index and abs(ps.gram[index, j]) <= 10 * tol
        ]
    if not sel:
        raise ValueError(f"no points orthogonal to point {index}; derived code is empty")
    rot = _householder_to_e1(ps.coords[index])
    coords = (ps.coords[sel] @ rot.T)[:, 1:]
    exact_gram = ps.exact_gram.submatrix(sel) if ps.exact_gram is not None else None
    return PointSet(coords, tol, exact_gram=exact_gram, _skip_norm_check=True)
