"""Verification of explicit unit-vector configurations: angle sets,
coherence, antipodality, tight-frame property, design strength via
Gegenbauer moments, and the matrix identities satisfied by halves of
antipodal designs.

Strength is certified through the moment sums

    S_k = sum_{x,y in X} G_k^{(d)}(<x,y>),

computable from the Gram matrix alone (no harmonic basis is ever
materialized): X is a t-design iff S_1 = ... = S_t = 0, and each S_k is a
squared norm, hence nonnegative.  Point sets whose pairwise inner
products are known rationals (built-in generators, rational input files)
are handled exactly; everything else is verified in floating point under
an explicit tolerance model, which makes those verdicts numerical
certificates, not proofs.

Exactness modes:

* ``exact``      -- rational coordinates with unit norms; Gram exact.
* ``gram-exact`` -- float coordinates but an exact rational Gram matrix
                    (e.g. a common irrational scale, or a generator whose
                    Gram is known by construction).
* ``float``      -- everything within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .bounds import dgs_antipodal, levenstein_sq, welch_sq
from .gegenbauer import (
    GegenbauerExpansion,
    annihilator,
    gegenbauer_expand,
    gegenbauer_poly,
    harm_dim,
)

DEFAULT_TOL = 1e-9

AngleValue = Union[Fraction, float]


@dataclass(frozen=True)
class ExactGram:
    """Exact Gram data: entry (i, j) equals ints[i, j] / den."""

    ints: np.ndarray  # integer matrix, symmetric
    den: int

    def value(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.ints[i, j]), self.den)

    def distinct_offdiag(self) -> List[Tuple[Fraction, int]]:
        """Distinct off-diagonal values with unordered-pair multiplicities."""
        n = self.ints.shape[0]
        iu = np.triu_indices(n, k=1)
        vals, counts = np.unique(self.ints[iu], return_counts=True)
        return [(Fraction(int(v), self.den), int(c)) for v, c in zip(vals, counts)]

    def submatrix(self, idx: Sequence[int]) -> "ExactGram":
        sel = np.asarray(idx)
        return ExactGram(self.ints[np.ix_(sel, sel)], self.den)


class PointSet:
    """An immutable list of unit vectors in R^d with a verification
    tolerance.  Use :meth:`from_floats` or :meth:`from_rational`.
    """

    __slots__ = ("dim", "n", "tolerance", "coords", "exact_gram", "exact_coords", "_gram")

    def __init__(
        self,
        coords: np.ndarray,
        tolerance: float = DEFAULT_TOL,
        exact_gram: Optional[ExactGram] = None,
        exact_coords: Optional[tuple] = None,
        _skip_norm_check: bool = False,
    ):
        coords = np.array(coords, dtype=float)  # private copy, frozen below
        if coords.ndim != 2:
            raise ValueError("points must form a 2-d array (ragged input?)")
        n, d = coords.shape
        if n < 1:
            raise ValueError("a point set needs at least one point")
        if d < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {d}")
        if tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {tolerance}")
        if not _skip_norm_check:
            norms = np.einsum("ij,ij->i", coords, coords)
            bad = np.argmax(np.abs(norms - 1.0))
            if abs(norms[bad] - 1.0) > tolerance:
                raise ValueError(
                    f"point {bad} has squared norm {norms[bad]:.12g}, "
                    f"outside tolerance {tolerance:g} of 1"
                )
        coords.setflags(write=False)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tolerance", float(tolerance))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "exact_gram", exact_gram)
        object.__setattr__(self, "exact_coords", exact_coords)
        object.__setattr__(self, "_gram", None)

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_floats(cls, points, tolerance: float = DEFAULT_TOL) -> "PointSet":
        """Validate a float coordinate list; exactness is not assumed."""
        return cls(np.asarray(points, dtype=float), tolerance)

    @classmethod
    def from_rational(
        cls, points, scale_sq: int = 1, tolerance: float = DEFAULT_TOL
    ) -> "PointSet":
        """Points given as rational rows r_i with |r_i|^2 = scale_sq; the
        actual unit vectors are r_i / sqrt(scale_sq).

        All pairwise inner products are then exact rationals; with
        scale_sq = 1 the coordinates themselves are exact.
        """
        if scale_sq < 1:
            raise ValueError(f"scale_sq must be a positive integer, got {scale_sq}")
        rows = [[Fraction(x) for x in row] for row in points]
        if not rows:
            raise ValueError("a point set needs at least one point")
        d = len(rows[0])
        if any(len(r) != d for r in rows):
            raise ValueError("ragged input: rows have different lengths")
        for i, r in enumerate(rows):
            norm = sum(x * x for x in r)
            if norm != scale_sq:
                raise ValueError(
                    f"point {i} has exact squared norm {norm}, expected {scale_sq}"
                )
        lcm = 1
        for r in rows:
            for x in r:
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        if lcm * lcm * scale_sq * d >= (1 << 62):
            # scaled integer Gram entries must stay inside int64
            raise ValueError(
                f"coordinate denominators (lcm {lcm}) too large for exact mode"
            )
        ints = np.array(
            [[int(x * lcm) for x in r] for r in rows], dtype=np.int64
        )
        gram = ExactGram(ints @ ints.T, lcm * lcm * scale_sq)
        coords = ints.astype(float) / (lcm * math.sqrt(scale_sq))
        exact_coords = (
            tuple(tuple(x for x in r) for r in rows) if scale_sq == 1 else None
        )
        return cls(
            coords,
            tolerance,
            exact_gram=gram,
            exact_coords=exact_coords,
            _skip_norm_check=True,
        )

    @classmethod
    def with_known_gram(
        cls,
        coords,
        gram_ints,
        gram_den: int,
        tolerance: float = DEFAULT_TOL,
    ) -> "PointSet":
        """Float coordinates plus a Gram matrix known exactly by
        construction; the two are cross-checked within tolerance."""
        coords = np.asarray(coords, dtype=float)
        gram = ExactGram(np.asarray(gram_ints, dtype=np.int64), gram_den)
        ps = cls(coords, tolerance, exact_gram=gram)
        resid = np.max(np.abs(ps.gram - gram.ints.astype(float) / gram_den))
        if resid > 10 * tolerance:
            raise ValueError(
                f"claimed exact Gram deviates from coordinates by {resid:.3g}"
            )
        return ps

    # -- basic accessors -------------------------------------------------

    @property
    def mode(self) -> str:
        if self.exact_coords is not None:
            return "exact"
        if self.exact_gram is not None:
            return "gram-exact"
        return "float"

    @property
    def gram(self) -> np.ndarray:
        if self._gram is None:
            g = self.coords @ self.coords.T
            g = np.clip((g + g.T) / 2.0, -1.0, 1.0)
            object.__setattr__(self, "_gram", g)
        return self._gram

    def subset(self, idx: Sequence[int]) -> "PointSet":
        idx = list(idx)
        return PointSet(
            self.coords[idx],
            self.tolerance,
            exact_gram=self.exact_gram.submatrix(idx) if self.exact_gram else None,
            exact_coords=tuple(self.exact_coords[i] for i in idx)
            if self.exact_coords
            else None,
            _skip_norm_check=True,
        )


def validate(points, tolerance: float = DEFAULT_TOL) -> PointSet:
    """Validate raw coordinates (floats, or rationals for exact mode)."""
    try:
        return PointSet.from_rational(points, tolerance=tolerance)
    except (ValueError, TypeError):
        pass
    return PointSet.from_floats(points, tolerance)


# -- angle sets ---------------------------------------------------------


def angle_set(ps: PointSet) -> List[Tuple[AngleValue, int]]:
    """Distinct pairwise inner products with unordered-pair multiplicities,
    sorted ascending.  Exact rationals in exact/gram-exact mode; clustered
    representatives (gap threshold 10*tolerance) in float mode.

    Two distinct points at inner product ~1 are duplicates and rejected.
    """
    gap = 10 * ps.tolerance
    if ps.exact_gram is not None:
        out = ps.exact_gram.distinct_offdiag()
        if out and out[-1][0] == 1:
            raise ValueError("duplicate points: inner product 1 between distinct indices")
        return out
    n = ps.n
    if n == 1:
        return []
    iu = np.triu_indices(n, k=1)
    vals = np.sort(ps.gram[iu])
    clusters: List[Tuple[float, int]] = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > gap:
            chunk = vals[start:i]
            clusters.append((float(chunk.mean()), len(chunk)))
            start = i
    if clusters and clusters[-1][0] > 1 - gap:
        raise ValueError("duplicate points: inner product ~1 between distinct indices")
    return clusters


def coherence(ps: PointSet) -> float:
    """max |<x, y>| over distinct pairs."""
    if ps.n < 2:
        return 0.0
    if ps.exact_gram is not None:
        return max(abs(float(v)) for v, _ in angle_set(ps))
    iu = np.triu_indices(ps.n, k=1)
    return float(np.max(np.abs(ps.gram[iu])))


def coherence_sq_exact(ps: PointSet) -> Optional[Fraction]:
    """Exact squared coherence when the Gram matrix is exact, else None."""
    if ps.exact_gram is None or ps.n < 2:
        return None
    return max(v * v for v, _ in angle_set(ps))


def is_antipodal(ps: PointSet) -> bool:
    """True iff the set equals its own negation."""
    if ps.n % 2 == 1:
        return False
    if ps.exact_gram is not None:
        hits = np.sum(ps.exact_gram.ints == -ps.exact_gram.den, axis=1)
        return bool(np.all(hits == 1))
    thresh = -1.0 + 10 * ps.tolerance
    return bool(np.all(ps.gram.min(axis=1) <= thresh))


def half(ps: PointSet) -> PointSet:
    """One point per antipodal pair, the lexicographically first member,
    in first-occurrence order.  Deterministic; requires antipodality."""
    n = ps.n
    if ps.exact_gram is not None:
        antipode_mask = ps.exact_gram.ints == -ps.exact_gram.den
    else:
        antipode_mask = ps.gram <= -1.0 + 10 * ps.tolerance
    paired = [False] * n
    kept: List[int] = []
    for i in range(n):
        if paired[i]:
            continue
        js = np.nonzero(antipode_mask[i])[0]
        js = [int(j) for j in js if not paired[j] and j != i]
        if len(js) != 1:
            raise ValueError(f"point {i} has {len(js)} unpaired antipodes; set is not antipodal")
        j = js[0]
        paired[i] = paired[j] = True
        kept.append(i if tuple(ps.coords[i]) <= tuple(ps.coords[j]) else j)
    return ps.subset(kept)


# -- Gegenbauer moments and strength -------------------------------------


@dataclass(frozen=True)
class MomentVector:
    """S_k = sum_{x,y} G_k(<x,y>) for k = 1..kmax; exact entries are
    Fractions, float entries carry rounding error only."""

    values: Tuple[object, ...]

    def __getitem__(self, k: int):
        if k < 1 or k > len(self.values):
            raise IndexError(f"moment index {k} out of range")
        return self.values[k - 1]


def gegenbauer_moment(ps: PointSet, k: int):
    """S_k computed from the Gram matrix only (addition formula); exact
    Fraction in exact/gram-exact mode, float otherwise."""
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    if ps.exact_gram is not None:
        vals, counts = np.unique(ps.exact_gram.ints, return_counts=True)
        poly = gegenbauer_poly(ps.dim, k)
        den = ps.exact_gram.den
        return sum(
            int(c) * poly(Fraction(int(v), den)) for v, c in zip(vals, counts)
        )
    coeffs = gegenbauer_poly(ps.dim, k).float_coeffs()
    acc = np.zeros_like(ps.gram)
    for c in reversed(coeffs):
        acc = acc * ps.gram + c
    return float(acc.sum())


def moments(ps: PointSet, kmax: int) -> MomentVector:
    return MomentVector(tuple(gegenbauer_moment(ps, k) for k in range(1, kmax + 1)))


@dataclass(frozen=True)
class StrengthReport:
    """Moment-based design strength: the largest t <= kmax with
    S_k <= tolerance * n^2 * h_k for every k <= t.  For antipodal sets the
    odd moments vanish identically and are skipped.  ``capped`` means no
    moment failed up to kmax, so the true strength may be larger."""

    strength: int
    capped: bool
    moments: Dict[int, object]
    antipodal: bool

    def __int__(self) -> int:
        return self.strength


def design_strength(ps: PointSet, kmax: Optional[int] = None) -> StrengthReport:
    """Largest certified strength t <= kmax (default kmax = 2s + 2)."""
    antip = is_antipodal(ps)
    if kmax is None:
        s = len(angle_set(ps))
        kmax = 2 * s + 2
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    n2 = ps.n * ps.n
    computed: Dict[int, object] = {}
    for k in range(1, kmax + 1):
        if antip and k % 2 == 1:
            computed[k] = 0  # identically zero by parity, not computed
            continue
        s_k = gegenbauer_moment(ps, k)
        computed[k] = s_k
        if s_k > ps.tolerance * n2 * harm_dim(ps.dim, k):
            return StrengthReport(k - 1, False, computed, antip)
    return StrengthReport(kmax, True, computed, antip)


def tight_frame_check(ps: PointSet) -> bool:
    """True iff the frame operator sum of x x^T equals (n/d) * identity
    within tolerance."""
    frame_op = ps.coords.T @ ps.coords
    target = (ps.n / ps.dim) * np.eye(ps.dim)
    return bool(np.max(np.abs(frame_op - target)) <= ps.tolerance * ps.n)


# -- identities satisfied by halves of antipodal designs ------------------


def _identity_angles(ps: PointSet) -> List[AngleValue]:
    """Angle set whose annihilator drives the matrix identities.

    For a half (no -1 among the inner products) the set is completed to
    an odd configuration {0} union {+-a}: the resulting polynomial is odd,
    still vanishes on every inner product and is 1 at 1.  A set containing
    -1 (i.e. itself antipodal) keeps its plain angle set.
    """
    vals = [v for v, _ in angle_set(ps)]
    exact = ps.exact_gram is not None
    gap = 10 * ps.tolerance
    has_minus_one = any(
        (v == -1) if exact else (float(v) < -1 + gap) for v in vals
    )
    if has_minus_one:
        return vals
    completed: List[AngleValue] = []
    if exact:
        sym = {Fraction(0)}
        for v in vals:
            sym.add(v)
            sym.add(-v)
        completed = sorted(sym)
    else:
        raw = sorted({0.0} | {float(v) for v in vals} | {-float(v) for v in vals})
        for v in raw:
            if not completed or v - completed[-1] > gap:
                completed.append(v)
    return completed


def _dk_matrix(ps: PointSet, k: int) -> np.ndarray:
    """(G_k(<x,y>)) from the float Gram matrix."""
    coeffs = gegenbauer_poly(ps.dim, k).float_coeffs()
    acc = np.zeros_like(ps.gram)
    for c in reversed(coeffs):
        acc = acc * ps.gram + c
    return acc


@dataclass(frozen=True)
class AnnihilatorIdentity:
    """Residual of sum_k f_k D_k = I for the annihilator expansion f."""

    residual: float
    expansion: GegenbauerExpansion
    angles: Tuple[AngleValue, ...]


def verify_annihilator_identity(half_set: PointSet) -> AnnihilatorIdentity:
    """Check that the Gegenbauer expansion of the annihilator of a half's
    angle set recombines the D_k matrices into the identity."""
    angles = _identity_angles(half_set)
    if not angles:
        angles = [Fraction(0)] if half_set.exact_gram is not None else [0.0]
    poly = annihilator(angles)
    expansion = gegenbauer_expand(poly, half_set.dim)
    acc = np.zeros((half_set.n, half_set.n))
    for k, f in enumerate(expansion.coeffs):
        fv = float(f)
        if fv != 0.0:
            acc += fv * _dk_matrix(half_set, k)
    residual = float(np.max(np.abs(acc - np.eye(half_set.n))))
    return AnnihilatorIdentity(residual, expansion, tuple(angles))


def verify_orthogonality(
    half_set: PointSet, k: int, l: int, strength: Optional[int] = None
) -> float:
    """Max-entry residual of D_k D_l = (|X|/2) Delta_{k,l} D_k on a half
    of an antipodal t-design, valid for k = l (mod 2) and k + l <= t.

    If ``strength`` is not supplied it is certified from the reassembled
    antipodal set first.
    """
    if k % 2 != l % 2:
        raise ValueError(f"k = {k} and l = {l} must have equal parity")
    if strength is None:
        full = PointSet(
            np.vstack([half_set.coords, -half_set.coords]),
            half_set.tolerance,
            _skip_norm_check=True,
        )
        strength = design_strength(full).strength
    if k + l > strength:
        raise ValueError(f"k + l = {k + l} exceeds the design strength {strength}")
    dk = _dk_matrix(half_set, k)
    dl = _dk_matrix(half_set, l)
    target = half_set.n * dk if k == l else np.zeros_like(dk)
    return float(np.max(np.abs(dk @ dl - target)))


@dataclass(frozen=True)
class DimIdentity:
    """Numerical check that the positive-coefficient eigenspaces of the
    D_k matrices span a space of dimension exactly |X|."""

    dim: int
    size: int
    match: bool


def dim_identity(ps: PointSet, rank_tol: float = 1e-8) -> DimIdentity:
    """Dimension of sum of V_k(X) over expansion coefficients f_k > 0,
    where V_k is the span of eigenvectors of D_k with eigenvalue above
    rank_tol times the largest one."""
    angles = _identity_angles(ps)
    if not angles:
        angles = [Fraction(0)] if ps.exact_gram is not None else [0.0]
    expansion = gegenbauer_expand(annihilator(angles), ps.dim)
    # float expansions carry rounding noise: a coefficient is "positive"
    # only when it clears a relative cutoff
    if expansion.is_exact:
        positive = [f > 0 for f in expansion.coeffs]
    else:
        fmax = max((abs(float(f)) for f in expansion.coeffs), default=0.0)
        positive = [float(f) > 1e-12 * fmax for f in expansion.coeffs]
    blocks: List[np.ndarray] = []
    for k, f in enumerate(expansion.coeffs):
        if not positive[k]:
            continue
        dk = _dk_matrix(ps, k)
        eigvals, eigvecs = np.linalg.eigh(dk)
        top = eigvals.max()
        if top <= 0:
            continue
        keep = eigvals > rank_tol * top
        if np.any(keep):
            blocks.append(eigvecs[:, keep])
    if not blocks:
        return DimIdentity(0, ps.n, ps.n == 0)
    stacked = np.hstack(blocks)
    sv = np.linalg.svd(stacked, compute_uv=False)
    dim = int(np.sum(sv > rank_tol * sv.max()))
    return DimIdentity(dim, ps.n, dim == ps.n)


# -- classification -------------------------------------------------------


@dataclass(frozen=True)
class DesignProfile:
    """Full verification profile of a point set, with packing verdicts."""

    dim: int
    n: int
    angle_set: Tuple[Tuple[float, int], ...]
    s: int
    coherence: float
    antipodal: bool
    strength: int
    strength_capped: bool
    moments: Tuple[Tuple[int, float], ...]
    verdicts: Dict[str, bool]
    notes: Tuple[str, ...] = ()
    exact_mode: str = "float"


def classify(ps: PointSet, kmax: Optional[int] = None) -> DesignProfile:
    """Profile a point set and test it against the Welch and Levenstein
    equality cases and the absolute antipodal bound.

    ``etf``: equiangular with squared coherence at the Welch bound.
    ``levenstein_equality``: angle set {0, +-a} with squared coherence at
    the Levenstein bound (defined past n = d(d+1)/2).
    ``dgs_tight``: antipodal with size meeting the absolute bound.
    """
    d, n = ps.dim, ps.n
    angles = angle_set(ps)
    s = len(angles)
    coh = coherence(ps)
    antip = is_antipodal(ps)
    strength = design_strength(ps, kmax)
    tol = 10 * ps.tolerance
    notes: List[str] = []

    coh_sq_exact = coherence_sq_exact(ps)
    abs_vals = sorted({abs(float(v)) for v, _ in angles})

    equiangular = s >= 1 and (
        len({abs(v) for v, _ in angles}) == 1
        if ps.exact_gram is not None
        else (abs_vals[-1] - abs_vals[0] <= tol if abs_vals else False)
    )
    etf_verdict = False
    if n > d and s >= 1 and equiangular:
        target = welch_sq(d, n)
        if coh_sq_exact is not None:
            etf_verdict = coh_sq_exact == target
        else:
            etf_verdict = abs(coh * coh - float(target)) <= tol

    leven_verdict = False
    if 2 * n > d * (d + 1):
        target = levenstein_sq(d, n)
        vals = [float(v) for v, _ in angles]
        has_zero = any(abs(v) <= tol for v in vals)
        nonzero = [v for v in vals if abs(v) > tol]
        symmetric = (
            len(nonzero) in (1, 2)
            and (len(nonzero) < 2 or abs(nonzero[0] + nonzero[1]) <= tol)
        )
        if s <= 3 and has_zero and symmetric:
            if coh_sq_exact is not None:
                leven_verdict = coh_sq_exact == target
            else:
                leven_verdict = abs(coh * coh - float(target)) <= tol

    dgs_tight = False
    if antip:
        bound = dgs_antipodal(d, s).value
        dgs_tight = Fraction(n) == bound
        if dgs_tight:
            notes.append(
                f"meets the absolute antipodal {s}-distance bound {bound}: tight design"
            )
    if strength.capped:
        notes.append(
            f"strength reported as {strength.strength} with no failing moment up to "
            f"kmax = {strength.strength}; true strength may be larger"
        )
    notes.append("numerical certificate, not a proof" if ps.exact_gram is None else "angle data exact")

    return DesignProfile(
        dim=d,
        n=n,
        angle_set=tuple((float(v), m) for v, m in angles),
        s=s,
        coherence=coh,
        antipodal=antip,
        strength=strength.strength,
        strength_capped=strength.capped,
        moments=tuple((k, float(v)) for k, v in sorted(strength.moments.items())),
        verdicts={
            "etf": etf_verdict,
            "levenstein_equality": leven_verdict,
            "dgs_tight": dgs_tight,
        },
        notes=tuple(notes),
        exact_mode=ps.mode,
    )
