"""Necessary-condition pipeline for Levenstein-equality packings: n unit
vectors in R^d whose coherence attains the Levenstein bound, equivalently
three-angle packings with angle set {0, +alpha, -alpha}.

Covered: exactness and integrality of 1/alpha and (n-d)/(d*alpha), the
strongly regular graph a packing induces on its nonorthogonality relation
(closed-form parameters, spectrum and multiplicities), membership in the
admissible size family n = d(d+2)(d-1+alpha)/(3*alpha), the spherical
embedding angles of that graph, and the two-distance-set size bound the
embedding must obey.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import is_integer, rational_sqrt
from .bounds import levenstein_sq
from .srg import SrgParams, SrgSpectrum, consistency_check, krein, value_float, value_sign
from .status import FAIL, NOT_APPLICABLE, PASS, Condition, aggregate_verdict

SPECIAL_HALF = "d(d+2)/2"
SPECIAL_TIGHT = "d(d+1)(d+2)/6"


def _check_domain(d: int, n: int) -> None:
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    if 2 * n <= d * (d + 1):
        raise ValueError(
            f"Levenstein equality requires n > d(d+1)/2 = {d * (d + 1) // 2}, got n = {n}"
        )


def alpha_sq(d: int, n: int) -> Fraction:
    """Squared common angle (3n - d(d+2)) / ((d+2)(n-d)) of a
    Levenstein-equality packing; only defined past n = d(d+1)/2."""
    _check_domain(d, n)
    return levenstein_sq(d, n)


def leven_srg(d: int, n: int) -> Tuple[SrgParams, SrgSpectrum]:
    """Closed-form parameters and spectrum of the nonorthogonality graph.

    With D = 3n - d(d+2):

        k   = (n-d)^2 (d+2) / (d D)
        lam = (n-d) ((d+8)n^2 - 9d(d+2)n + 2d^2(d+2)^2) / (d D^2)
        mu  = (n-d)^2 (d+2) n / (d D^2)
        r1  = (n-d)(2n - d(d+2)) / (d D),   r2 = -(n-d)(d+2) / D

    with multiplicities n1 = d(d+1)/2 - 1 and n2 = n - d(d+1)/2.
    Non-integral values are returned as exact rationals so callers can
    report them as infeasibility witnesses.
    """
    _check_domain(d, n)
    big = 3 * n - d * (d + 2)
    nd = n - d
    k = Fraction(nd * nd * (d + 2), d * big)
    lam = Fraction(
        nd * ((d + 8) * n * n - 9 * d * (d + 2) * n + 2 * d * d * (d + 2) ** 2),
        d * big * big,
    )
    mu = Fraction(nd * nd * (d + 2) * n, d * big * big)
    r1 = Fraction(nd * (2 * n - d * (d + 2)), d * big)
    r2 = Fraction(-nd * (d + 2), big)
    n1 = Fraction(d * (d + 1), 2) - 1
    n2 = Fraction(n) - Fraction(d * (d + 1), 2)
    return SrgParams.of(n, k, lam, mu), SrgSpectrum(r1, r2, n1, n2)


def al_integrality(d: int, n: int) -> Condition:
    """Both 1/alpha and (n-d)/(d*alpha) must be integers (d >= 4).

    Fails immediately when alpha^2 is not the square of a rational.
    """
    if d < 4:
        return Condition(
            "al_integrality", NOT_APPLICABLE, {"reason": "established for d >= 4 only"}
        )
    asq = alpha_sq(d, n)
    alpha = rational_sqrt(asq)
    if alpha is None or alpha == 0:
        return Condition(
            "al_integrality",
            FAIL,
            {"reason": f"alpha^2 = {asq} is not the square of a rational"},
        )
    inv = 1 / alpha
    second = Fraction(n - d, d) * inv
    witness = {"inv_alpha": str(inv), "scaled_eigenvalue": str(second)}
    if not is_integer(inv):
        witness["reason"] = f"1/alpha = {inv} is not an integer"
        return Condition("al_integrality", FAIL, witness)
    if not is_integer(second):
        witness["reason"] = f"(n-d)/(d*alpha) = {second} is not an integer"
        return Condition("al_integrality", FAIL, witness)
    witness["roots"] = (int(inv), int(second))
    return Condition("al_integrality", PASS, witness)


@dataclass(frozen=True)
class SizeCandidate:
    """One admissible packing size, annotated with the integer alpha that
    produced it (None for the standalone value d(d+2)/2), the window
    [d(d+3)/2, d(d+2)^2/9], and whether the integrality conditions on
    alpha hold."""

    n: int
    alpha: Optional[int]
    in_window: bool
    special: Optional[str]
    al_pass: bool


def enumerate_sizes(d: int, apply_al_filter: bool = False) -> List[SizeCandidate]:
    """All integer sizes n = d(d+2)(d-1+alpha)/(3*alpha) for integer
    alpha in [2, 2(d-1)(d+2)/(d+5)], plus d(d+2)/2 when integral.

    Both alpha endpoints are inclusive; alpha = 2 reproduces the tight
    case n = d(d+1)(d+2)/6.  With ``apply_al_filter`` only candidates
    passing :func:`al_integrality` survive.
    """
    if d < 4:
        raise ValueError(f"enumerate_sizes requires d >= 4, got d = {d}")
    window_lo = Fraction(d * (d + 3), 2)
    window_hi = Fraction(d * (d + 2) ** 2, 9)
    tight = Fraction(d * (d + 1) * (d + 2), 6)
    half_special = Fraction(d * (d + 2), 2)

    def build(n: Fraction, alpha: Optional[int]) -> SizeCandidate:
        special = None
        if n == half_special:
            special = SPECIAL_HALF
        elif n == tight:
            special = SPECIAL_TIGHT
        return SizeCandidate(
            n=int(n),
            alpha=alpha,
            in_window=window_lo <= n <= window_hi,
            special=special,
            al_pass=al_integrality(d, int(n)).status == PASS,
        )

    candidates: List[SizeCandidate] = []
    alpha_max = (2 * (d - 1) * (d + 2)) // (d + 5)
    for alpha in range(2, alpha_max + 1):
        n = Fraction(d * (d + 2) * (d - 1 + alpha), 3 * alpha)
        if is_integer(n):
            candidates.append(build(n, alpha))
    if is_integer(half_special):
        candidates.append(build(half_special, None))
    candidates.sort(key=lambda c: c.n)
    if apply_al_filter:
        candidates = [c for c in candidates if c.al_pass]
    return candidates


def embedding_angles(d: int, n: int) -> Tuple[Fraction, Fraction]:
    """Inner products (-d/(n-d), d/(2n - d(d+1))) of the graph's spherical
    embedding into the second eigenspace.

    Rejected at n = d(d+2)/2, where the positive angle degenerates to 1
    and the embedding repeats vectors.
    """
    _check_domain(d, n)
    if 2 * n == d * (d + 2):
        raise ValueError(
            f"embedding degenerates at n = d(d+2)/2 = {n}: positive angle equals 1"
        )
    return Fraction(-d, n - d), Fraction(d, 2 * n - d * (d + 1))


def two_distance_bound_check(d: int, n: int) -> Condition:
    """The embedding is a two-distance set in dimension m = n - d(d+1)/2,
    so n <= m(m+3)/2 must hold."""
    _check_domain(d, n)
    m = n - d * (d + 1) // 2
    bound = Fraction(m * (m + 3), 2)
    ok = n <= bound
    return Condition(
        "two_distance",
        PASS if ok else FAIL,
        {"embedding_dim": m, "bound": str(bound)},
    )


@dataclass(frozen=True)
class LevenFeasibility:
    """Aggregated necessary-condition report for a (d, n)
    Levenstein-equality packing."""

    d: int
    n: int
    alpha_sq: Fraction
    conditions: Tuple[Condition, ...]
    verdict: str
    notes: Tuple[str, ...] = ()

    def condition(self, cond_id: str) -> Condition:
        for c in self.conditions:
            if c.id == cond_id:
                return c
        raise KeyError(cond_id)


def leven_report(d: int, n: int) -> LevenFeasibility:
    """Run the full Levenstein-equality necessary-condition chain."""
    _check_domain(d, n)
    asq = alpha_sq(d, n)
    conditions = []
    notes: List[str] = []

    alpha = rational_sqrt(asq)
    conditions.append(
        Condition(
            "alpha_exact",
            PASS if alpha is not None else FAIL,
            {"alpha_sq": str(asq)}
            if alpha is not None
            else {"alpha_sq": str(asq), "reason": "alpha is irrational"},
        )
    )

    conditions.append(al_integrality(d, n))

    params, spect = leven_srg(d, n)
    chk = consistency_check(params)
    conditions.append(
        Condition(
            "srg_consistency",
            PASS if chk.ok else FAIL,
            {
                "params": tuple(str(x) for x in params.as_tuple()),
                "spectrum": (str(spect.r1), str(spect.r2)),
                "multiplicities": (str(spect.n1), str(spect.n2)),
                "witnesses": chk.witnesses,
            },
        )
    )

    k1, k2 = krein(params)
    conditions.append(
        Condition(
            "krein",
            PASS if value_sign(k1) >= 0 and value_sign(k2) >= 0 else FAIL,
            {"K1": str(k1), "K2": str(k2), "K1_approx": value_float(k1), "K2_approx": value_float(k2)},
        )
    )

    if d < 4:
        conditions.append(
            Condition(
                "enum_membership",
                NOT_APPLICABLE,
                {"reason": "size law established for d >= 4 only"},
            )
        )
    else:
        candidates = enumerate_sizes(d)
        member = next((c for c in candidates if c.n == n), None)
        conditions.append(
            Condition(
                "enum_membership",
                PASS if member is not None else FAIL,
                {"alpha": member.alpha, "special": member.special}
                if member is not None
                else {"admissible_sizes": tuple(c.n for c in candidates)},
            )
        )

    if 2 * n == d * (d + 2):
        conditions.append(
            Condition(
                "two_distance",
                NOT_APPLICABLE,
                {"reason": "embedding degenerates at n = d(d+2)/2"},
            )
        )
    else:
        conditions.append(two_distance_bound_check(d, n))
        neg, pos = embedding_angles(d, n)
        notes.append(f"spherical embedding angle set: {{{neg}, {pos}}}")

    conds = tuple(conditions)
    return LevenFeasibility(d, n, asq, conds, aggregate_verdict(conds), tuple(notes))


@dataclass(frozen=True)
class Antipodal45Sizes:
    """Admissible sizes of an antipodal 4-distance strength-5 set: twice
    the packing sizes, kept only when even (an antipodal set has even
    cardinality); odd candidates are recorded, not silently dropped."""

    sizes: Tuple[int, ...]
    dropped_odd: Tuple[int, ...]


def antipodal_4_5_sizes(d: int) -> Antipodal45Sizes:
    """Integer sizes 2d(d+2)(d-1+alpha)/(3*alpha) for alpha in
    [3, 2(d-1)(d+2)/(d+5)] plus d(d+2), filtered to even values."""
    if d < 4:
        raise ValueError(f"antipodal_4_5_sizes requires d >= 4, got d = {d}")
    raw: List[int] = []
    alpha_max = (2 * (d - 1) * (d + 2)) // (d + 5)
    for alpha in range(3, alpha_max + 1):
        size = Fraction(2 * d * (d + 2) * (d - 1 + alpha), 3 * alpha)
        if is_integer(size):
            raw.append(int(size))
    raw.append(d * (d + 2))
    raw.sort()
    sizes = tuple(s for s in raw if s % 2 == 0)
    dropped = tuple(s for s in raw if s % 2 == 1)
    return Antipodal45Sizes(sizes, dropped)
