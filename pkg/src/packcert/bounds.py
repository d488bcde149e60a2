"""Closed-form size and coherence bounds for antipodal few-distance
spherical sets and unit-norm line packings, plus the best-known-bound
dispatcher.

Size bounds are reported as exact rationals; flooring to an integer is a
presentation step and is only ever mentioned in the report note.
Coherence bounds are exposed squared so the certification path stays in
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import binomial, is_integer
from .gegenbauer import harm_dim


@dataclass(frozen=True)
class BoundReport:
    """One evaluated size bound.  ``applicable`` False means the formula's
    hypotheses exclude the query and ``value`` is absent."""

    formula_id: str
    applicable: bool
    value: Optional[Fraction] = None
    note: str = ""

    def floor(self) -> Optional[int]:
        if self.value is None:
            return None
        return self.value.numerator // self.value.denominator


def _delta(s: int) -> int:
    """1 for odd s, 0 for even s."""
    return s % 2


def _check_ds(d: int, s: int) -> None:
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    if s < 1:
        raise ValueError(f"number of distances s must be >= 1, got {s}")


def _check_odd_t(t: int) -> None:
    if t % 2 == 0:
        raise ValueError(f"strength t must be odd for antipodal sets, got {t}")


def dgs_antipodal(d: int, s: int) -> BoundReport:
    """Absolute bound 2*C(d+s-2, s-1) for an antipodal s-distance set in
    R^d; equality characterizes tight (2s-1)-designs."""
    _check_ds(d, s)
    value = Fraction(2 * binomial(d + s - 2, s - 1))
    return BoundReport("dgs", True, value)


def nozaki_suda(d: int, s: int, t: int) -> BoundReport:
    """Bound 2*C(d+s-delta-1, s-delta) - 2*h_{t-s+delta+1}, valid for odd
    t in [s-delta-1, 2s-2delta-3] where delta = s mod 2."""
    _check_ds(d, s)
    _check_odd_t(t)
    delta = _delta(s)
    lo, hi = s - delta - 1, 2 * s - 2 * delta - 3
    if not (lo <= t <= hi):
        return BoundReport(
            "nozaki_suda", False, note=f"requires odd t in [{lo}, {hi}], got t = {t}"
        )
    value = Fraction(
        2 * binomial(d + s - delta - 1, s - delta)
        - 2 * harm_dim(d, t - s + delta + 1)
    )
    return BoundReport("nozaki_suda", True, value)


def xxy_bound(d: int, s: int, t: int) -> BoundReport:
    """Sharpened bound 2*C(d+s-2, s-1) - 2*h_{t-s+2} for even s in
    [(t+5)/2, t+1] with odd t >= 3."""
    _check_ds(d, s)
    _check_odd_t(t)
    if t < 3:
        return BoundReport("xxy", False, note=f"requires t >= 3, got t = {t}")
    if s % 2 != 0:
        return BoundReport("xxy", False, note=f"requires even s, got s = {s}")
    if not (Fraction(t + 5, 2) <= s <= t + 1):
        return BoundReport(
            "xxy",
            False,
            note=f"requires s in [(t+5)/2, t+1] = [{Fraction(t+5,2)}, {t+1}], got s = {s}",
        )
    value = Fraction(2 * binomial(d + s - 2, s - 1) - 2 * harm_dim(d, t - s + 2))
    return BoundReport("xxy", True, value)


def best_known(d: int, s: int, t: int) -> BoundReport:
    """Dispatch to the best known upper bound for an antipodal s-distance
    set of strength t in R^d.

    Rows, in order of specificity: the (s,t) = (3,3) and (4,5) closed
    forms; even s = (t+3)/2 with t >= 7 (minimum of the absolute bound and
    the even-branch formula, both reported); even s in [(t+5)/2, t+1];
    odd s in [(t+5)/2, t+2]; otherwise the absolute bound with a note.
    """
    _check_ds(d, s)
    if s < 2:
        raise ValueError(f"best_known requires s >= 2, got s = {s}")
    _check_odd_t(t)

    def with_floor_note(formula_id: str, value: Fraction, extra: str = "") -> BoundReport:
        note = extra
        if not is_integer(value):
            floor = value.numerator // value.denominator
            sep = "; " if note else ""
            note = f"{note}{sep}integer sizes must not exceed floor = {floor}"
        return BoundReport(formula_id, True, value, note)

    if s == 3 and t == 3:
        return with_floor_note("table1_row", Fraction(2 * d * (d + 2), 3), "row s=3,t=3")
    if s == 4 and t == 5:
        return with_floor_note(
            "table1_row", Fraction(2 * d * (d + 2) ** 2, 9), "row s=4,t=5"
        )
    if s % 2 == 0 and t >= 7 and 2 * s == t + 3:
        dgs_val = dgs_antipodal(d, s).value
        alt = Fraction(2 * binomial(d + s - 1, s) - 2 * harm_dim(d, t - s + 1))
        value = min(dgs_val, alt)
        return with_floor_note(
            "table1_row",
            value,
            f"row even s=(t+3)/2, t>=7: min of dgs = {dgs_val} and {alt}",
        )
    if s % 2 == 0:
        rep = xxy_bound(d, s, t)
        if rep.applicable:
            return with_floor_note("xxy", rep.value, "row even s in [(t+5)/2, t+1]")
    else:
        if Fraction(t + 5, 2) <= s <= t + 2:
            value = Fraction(2 * binomial(d + s - 2, s - 1) - 2 * harm_dim(d, t - s + 2))
            return with_floor_note(
                "nozaki_suda", value, "row odd s in [(t+5)/2, t+2]"
            )
    rep = dgs_antipodal(d, s)
    return with_floor_note(
        "dgs", rep.value, f"no sharper row covers (s, t) = ({s}, {t}); absolute bound"
    )


def welch_sq(d: int, n: int) -> Fraction:
    """Squared Welch coherence lower bound (n-d)/(d(n-1)) for n > d."""
    if not n > d:
        raise ValueError(f"welch_sq requires n > d, got n = {n}, d = {d}")
    return Fraction(n - d, d * (n - 1))


def levenstein_sq(d: int, n: int) -> Fraction:
    """Squared Levenstein coherence lower bound (3n-d(d+2))/((d+2)(n-d)).

    The formula is positive only past n = d(d+2)/3; it supersedes the
    Welch bound once n exceeds d(d+1)/2 (equality there needs that range).
    """
    if not n > d:
        raise ValueError(f"levenstein_sq requires n > d, got n = {n}, d = {d}")
    if 3 * n <= d * (d + 2):
        raise ValueError(
            f"levenstein_sq requires n > d(d+2)/3 = {Fraction(d*(d+2),3)}, got n = {n}"
        )
    return Fraction(3 * n - d * (d + 2), (d + 2) * (n - d))


@dataclass(frozen=True)
class GerzonResult:
    """Where n sits relative to the two-sided size window for nontrivial
    real equiangular tight frames."""

    inside: bool
    side: str  # below | inside | above
    on_lower_boundary: bool = False
    on_upper_boundary: bool = False


def gerzon_check(d: int, n: int) -> GerzonResult:
    """Decide d + 1/2 + sqrt(2d + 1/4) <= n <= d(d+1)/2 exactly.

    The lower inequality is equivalent to the integer inequality
    n^2 - (2d+1)n + d^2 - d >= 0 on this range, so no rounding occurs.
    """
    if not n > d + 1 > 2:
        raise ValueError(f"gerzon_check requires n > d+1 > 2, got n = {n}, d = {d}")
    quad = n * n - (2 * d + 1) * n + d * d - d
    upper = d * (d + 1) // 2
    if quad < 0:
        return GerzonResult(False, "below")
    if n > upper:
        return GerzonResult(False, "above")
    return GerzonResult(True, "inside", quad == 0, n == upper)


def welch_report(d: int, n: int) -> BoundReport:
    """Squared Welch bound as a report; inapplicable for n <= d."""
    if n <= d:
        return BoundReport("welch", False, note=f"requires n > d, got n = {n}")
    return BoundReport("welch", True, welch_sq(d, n), "squared coherence lower bound")


def levenstein_report(d: int, n: int) -> BoundReport:
    """Squared Levenstein bound as a report; inapplicable outside its
    domain, and only attainable past n = d(d+1)/2 (noted)."""
    if n <= d or 3 * n <= d * (d + 2):
        return BoundReport(
            "levenstein", False, note=f"requires n > max(d, d(d+2)/3), got n = {n}"
        )
    note = "squared coherence lower bound"
    if 2 * n <= d * (d + 1):
        note += f"; attainable only past n = d(d+1)/2 = {d * (d + 1) // 2}"
    return BoundReport("levenstein", True, levenstein_sq(d, n), note)


def gerzon_report(d: int, n: int) -> BoundReport:
    """The two-sided size window as a report: the value is the upper size
    cap d(d+1)/2, the note records where n falls."""
    if not n > d + 1 > 2:
        return BoundReport("gerzon", False, note=f"requires n > d+1 > 2, got n = {n}")
    res = gerzon_check(d, n)
    note = f"n = {n} is {res.side} the admissible window"
    if res.on_lower_boundary:
        note += " (on the lower boundary)"
    if res.on_upper_boundary:
        note += " (on the upper boundary)"
    return BoundReport("gerzon", True, Fraction(d * (d + 1), 2), note)
