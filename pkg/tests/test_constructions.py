from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from packcert.bounds import dgs_antipodal, levenstein_sq, welch_sq
from packcert.constructions import (
    cross_polytope,
    derived_code,
    e8_roots,
    icosahedron,
    simplex_etf,
)
from packcert.leven import leven_report, leven_srg
from packcert.pointset import (
    angle_set,
    classify,
    coherence,
    coherence_sq_exact,
    design_strength,
    half,
    is_antipodal,
)


class TestSimplex:
    def test_gram(self):
        ps = simplex_etf(3)
        assert ps.n == 4 and ps.dim == 3 and ps.mode == "gram-exact"
        assert angle_set(ps) == [(Fraction(-1, 3), 6)]

    def test_classifies_as_etf(self):
        for d in (2, 3, 5, 8):
            prof = classify(simplex_etf(d))
            assert prof.verdicts["etf"]
            assert coherence_sq_exact(simplex_etf(d)) == welch_sq(d, d + 1) == Fraction(
                1, d * d
            )

    def test_strength_two(self):
        assert design_strength(simplex_etf(3)).strength == 2


class TestCrossPolytope:
    def test_structure(self):
        ps = cross_polytope(3)
        assert ps.n == 6 and ps.mode == "exact" and is_antipodal(ps)
        assert [v for v, _ in angle_set(ps)] == [Fraction(-1), Fraction(0)]

    def test_tight_for_two_distance_bound(self):
        for d in (2, 3, 5, 9):
            ps = cross_polytope(d)
            assert Fraction(ps.n) == dgs_antipodal(d, 2).value
            assert classify(ps).verdicts["dgs_tight"]

    def test_strength_three(self):
        assert design_strength(cross_polytope(3)).strength == 3

    def test_half_orthonormal(self):
        h = half(cross_polytope(5))
        assert coherence(h) == 0.0 and h.n == 5


class TestIcosahedron:
    def test_profile(self):
        ps = icosahedron()
        assert ps.n == 12 and is_antipodal(ps)
        prof = classify(ps)
        assert prof.s == 3 and prof.strength == 5
        assert prof.verdicts["dgs_tight"]  # 12 = absolute bound at s = 3

    def test_size_is_d_times_d_plus_one(self):
        assert icosahedron().n == 3 * 4

    def test_half_attains_welch(self):
        h = half(icosahedron())
        assert abs(coherence(h) ** 2 - float(welch_sq(3, 6))) < 1e-12


class TestE8:
    def test_counts_and_mode(self):
        ps = e8_roots()
        assert ps.n == 240 and ps.dim == 8
        assert ps.mode == "gram-exact"
        assert is_antipodal(ps)

    def test_per_point_angle_multiset(self):
        ps = e8_roots()
        den = ps.exact_gram.den
        row = Counter(Fraction(int(x), den) for x in ps.exact_gram.ints[0])
        assert row == Counter(
            {
                Fraction(1): 1,
                Fraction(-1): 1,
                Fraction(1, 2): 56,
                Fraction(-1, 2): 56,
                Fraction(0): 126,
            }
        )

    def test_strength_seven(self):
        rep = design_strength(e8_roots())
        assert rep.strength == 7
        for k in (2, 4, 6):
            assert rep.moments[k] == 0


class TestDerivedCode:
    def test_e8_derived_is_e7_configuration(self):
        dc = derived_code(e8_roots(), 0)
        assert dc.n == 126 and dc.dim == 7
        assert [v for v, _ in angle_set(dc)] == [
            Fraction(-1),
            Fraction(-1, 2),
            Fraction(0),
            Fraction(1, 2),
        ]
        assert is_antipodal(dc)
        assert design_strength(dc).strength == 5

    def test_index_invariance(self):
        sizes = {derived_code(e8_roots(), i).n for i in (0, 57, 239)}
        assert sizes == {126}

    def test_cross_polytope_subcode(self):
        dc = derived_code(cross_polytope(3), 0)
        assert dc.n == 4 and dc.dim == 2
        assert [v for v, _ in angle_set(dc)] == [Fraction(-1), Fraction(0)]

    def test_non_antipodal_rejected(self):
        with pytest.raises(ValueError, match="antipodal"):
            derived_code(simplex_etf(3), 0)

    def test_empty_rejected(self):
        from packcert.pointset import PointSet

        pair = PointSet.from_rational([[1, 0], [-1, 0]])
        with pytest.raises(ValueError, match="empty"):
            derived_code(pair, 0)  # nothing is orthogonal to the pair

    def test_gram_exactness_survives(self):
        dc = derived_code(e8_roots(), 3)
        assert dc.mode == "gram-exact"
        # float coordinates track the exact Gram
        resid = np.max(
            np.abs(dc.coords @ dc.coords.T - dc.exact_gram.ints / dc.exact_gram.den)
        )
        assert resid < 1e-12


class TestEndToEnd:
    def test_e8_chain_reproduces_7_63(self):
        hd = half(derived_code(e8_roots(), 0))
        assert hd.n == 63 and hd.dim == 7
        assert 63 == 7 * 9 * 9 // 9  # d(d+2)^2/9 at d = 7
        prof = classify(hd)
        assert prof.verdicts["levenstein_equality"]
        assert coherence_sq_exact(hd) == levenstein_sq(7, 63) == Fraction(1, 4)
        rep = leven_report(7, 63)
        assert rep.verdict == "feasible"
        params, spect = leven_srg(7, 63)
        assert tuple(int(x) for x in params.as_tuple()) == (63, 32, 16, 16)
        assert (spect.n1, spect.n2) == (27, 35)

    def test_icosahedron_attains_both_equalities(self):
        ps = icosahedron()
        assert ps.n == 3 * (3 + 1)  # d(d+1)
        h = half(ps)
        assert abs(coherence(h) ** 2 - float(welch_sq(3, 6))) < 1e-12
        assert Fraction(ps.n) == dgs_antipodal(3, 3).value
