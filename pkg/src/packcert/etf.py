"""Necessary-condition pipeline for real equiangular tight frames (ETFs)
of n unit vectors in R^d.

The chain: the Gerzon size window, the odd-integrality of the two square
roots sqrt(d(n-1)/(n-d)) and sqrt((n-d)(n-1)/d), the associated strongly
regular graph on n-1 vertices with its counting and Krein conditions, and
the sharpened window that pins n to either two exceptional values or the
interval [d + 1/2 + sqrt(3d + 1/4), d(d+2)/3].

Every threshold involving a square root is decided through exact surd
comparison; nothing is rounded.  A "feasible" verdict only means that no
implemented necessary condition fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .arith import cmp_surd, int_sqrt, is_integer, rational_sqrt
from .bounds import gerzon_check
from .srg import (
    SrgParams,
    consistency_check,
    krein,
    make_surd,
    value_float,
    value_is_rational,
    value_sign,
)
from .status import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    Condition,
    aggregate_verdict,
)

EXCEPTIONAL_LOWER = "exceptional_lower"
EXCEPTIONAL_UPPER = "exceptional_upper"
WINDOW = "window"
INFEASIBLE_CLASS = "infeasible"


def _check_dn(d: int, n: int) -> None:
    if not n > d + 1 > 2:
        raise ValueError(f"requires n > d+1 > 2, got n = {n}, d = {d}")


@dataclass(frozen=True)
class EtfSrg:
    """Strongly-regular-graph data derived from a hypothetical (d, n) ETF.

    The graph lives on n-1 vertices with degree
    a = n/2 - 1 + (1 - n/(2d)) * sqrt(d(n-1)/(n-d)) and parameter tuple
    (n-1, a, (3a-n)/2, a/2).  When the radicand is not a perfect rational
    square the degree is irrational (carried exactly as a surd) and no
    such graph can exist; ``a_is_rational`` is the witness flag.  The
    radical term vanishes at n = 2d, where a is rational regardless.
    """

    params: SrgParams
    a: object  # Fraction | QuadSurd
    radicand: Fraction
    a_is_rational: bool


def etf_srg(d: int, n: int) -> EtfSrg:
    """Exact SRG parameters associated with a (d, n) ETF."""
    _check_dn(d, n)
    radicand = Fraction(d * (n - 1), n - d)
    coef = Fraction(2 * d - n, 2 * d)  # 1 - n/(2d)
    root = rational_sqrt(radicand)
    if root is None:
        root = make_surd(0, 1, radicand.denominator, radicand.numerator * radicand.denominator)
    a = Fraction(n, 2) - 1 + coef * root
    params = SrgParams.of(n - 1, a, (3 * a - n) / 2, a / 2)
    return EtfSrg(params, a, radicand, value_is_rational(a))


def aw_integrality(d: int, n: int) -> Condition:
    """Both sqrt(d(n-1)/(n-d)) and sqrt((n-d)(n-1)/d) must be odd integers.

    Not applicable for n <= d+1 or n = 2d, where the criterion says
    nothing.  Witnesses carry the two roots on pass and the offending
    radicand otherwise.
    """
    if n <= d + 1 or n == 2 * d:
        return Condition(
            "aw_integrality",
            NOT_APPLICABLE,
            {"reason": "n = 2d excluded" if n == 2 * d else "requires n > d+1"},
        )
    roots = []
    for tag, radicand in (
        ("sqrt(d(n-1)/(n-d))", Fraction(d * (n - 1), n - d)),
        ("sqrt((n-d)(n-1)/d)", Fraction((n - d) * (n - 1), d)),
    ):
        root = rational_sqrt(radicand)
        if root is None:
            return Condition(
                "aw_integrality",
                FAIL,
                {"reason": f"{tag}: radicand {radicand} is not a perfect square"},
            )
        if not is_integer(root):
            return Condition(
                "aw_integrality",
                FAIL,
                {"reason": f"{tag} = {root} is not an integer"},
            )
        if root.numerator % 2 == 0:
            return Condition(
                "aw_integrality",
                FAIL,
                {"reason": f"{tag} = {root} is even, must be odd"},
            )
        roots.append(int(root))
    return Condition("aw_integrality", PASS, {"roots": tuple(roots)})


def sharpened_window(d: int) -> Tuple[int, Fraction]:
    """Integer endpoints of the sharpened admissible interval: the least
    integer n with n >= d + 1/2 + sqrt(3d + 1/4), and d(d+2)/3.

    The lower condition is equivalent to (2n - 2d - 1)^2 >= 12d + 1 with
    2n - 2d - 1 odd and positive, so the endpoint is exact.
    """
    r = int_sqrt(12 * d + 1)
    t = r.floor_root if r.is_exact else r.floor_root + 1
    if t % 2 == 0:
        t += 1
    return d + (1 + t) // 2, Fraction(d * (d + 2), 3)


def coro1_classify(d: int, n: int) -> str:
    """Place n in the sharpened ETF size law for d >= 5: one of the two
    exceptional values, inside the window, or infeasible.

    For d < 5 the law is not established and NOT_APPLICABLE is returned.
    """
    if n <= d + 1:
        raise ValueError(f"coro1_classify requires n > d+1, got n = {n}, d = {d}")
    if d < 5:
        return NOT_APPLICABLE
    if cmp_surd(n, Fraction(2 * d + 1, 2), Fraction(8 * d + 1, 4)) == 0:
        return EXCEPTIONAL_LOWER
    if 2 * n == d * (d + 1):
        return EXCEPTIONAL_UPPER
    lower_ok = cmp_surd(n, Fraction(2 * d + 1, 2), Fraction(12 * d + 1, 4)) >= 0
    if lower_ok and 3 * n <= d * (d + 2):
        return WINDOW
    return INFEASIBLE_CLASS


@dataclass(frozen=True)
class EtfFeasibility:
    """Aggregated necessary-condition report for a (d, n) real ETF."""

    d: int
    n: int
    conditions: Tuple[Condition, ...]
    verdict: str
    notes: Tuple[str, ...] = ()

    def condition(self, cond_id: str) -> Condition:
        for c in self.conditions:
            if c.id == cond_id:
                return c
        raise KeyError(cond_id)


def _conjecture_note(d: int, n: int) -> Optional[str]:
    if 3 * n == d * (d + 2):
        partner = (d + 1, (d + 1) * (d + 2) // 2)
    elif 2 * n == d * (d + 1) and (d - 1) * (d + 1) % 3 == 0:
        partner = (d - 1, (d - 1) * (d + 1) // 3)
    else:
        return None
    return (
        f"conjectured partner pair (informational, not asserted): an ETF for "
        f"(d, n) = ({d}, {n}) is conjectured to exist iff one exists for {partner}"
    )


def etf_report(d: int, n: int) -> EtfFeasibility:
    """Run the full ETF necessary-condition chain on (d, n)."""
    _check_dn(d, n)
    conditions = []

    gz = gerzon_check(d, n)
    conditions.append(
        Condition(
            "gerzon",
            PASS if gz.inside else FAIL,
            {
                "side": gz.side,
                "on_lower_boundary": gz.on_lower_boundary,
                "on_upper_boundary": gz.on_upper_boundary,
            },
        )
    )

    conditions.append(aw_integrality(d, n))

    derived = etf_srg(d, n)
    if not derived.a_is_rational:
        conditions.append(
            Condition(
                "srg_consistency",
                FAIL,
                {
                    "reason": f"graph degree a = {derived.a} is irrational "
                    f"(radicand {derived.radicand} is not a perfect square)"
                },
            )
        )
    else:
        chk = consistency_check(derived.params)
        conditions.append(
            Condition(
                "srg_consistency",
                PASS if chk.ok else FAIL,
                {
                    "params": tuple(str(x) for x in derived.params.as_tuple()),
                    "witnesses": chk.witnesses,
                },
            )
        )

    k1, k2 = krein(derived.params)
    krein_ok = value_sign(k1) >= 0 and value_sign(k2) >= 0
    conditions.append(
        Condition(
            "krein",
            PASS if krein_ok else FAIL,
            {
                "K1": str(k1),
                "K2": str(k2),
                "K1_approx": value_float(k1),
                "K2_approx": value_float(k2),
            },
        )
    )

    classification = coro1_classify(d, n)
    if classification == NOT_APPLICABLE:
        cond = Condition(
            "coro1_window",
            NOT_APPLICABLE,
            {"reason": "sharpened window is established for d >= 5 only"},
        )
    else:
        lo, hi = sharpened_window(d)
        cond = Condition(
            "coro1_window",
            FAIL if classification == INFEASIBLE_CLASS else PASS,
            {
                "classification": classification,
                "window": (lo, hi.numerator // hi.denominator),
                "window_upper_exact": str(hi),
            },
        )
    conditions.append(cond)

    notes = []
    note = _conjecture_note(d, n)
    if note:
        notes.append(note)
    notes.append("feasible = no implemented necessary condition fails; never an existence claim")

    conds = tuple(conditions)
    return EtfFeasibility(d, n, conds, aggregate_verdict(conds), tuple(notes))
