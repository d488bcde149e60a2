from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from packcert.etf import etf_srg
from packcert.srg import (
    SrgParams,
    consistency_check,
    is_conference,
    krein,
    make_surd,
    spectrum,
    value_sign,
)


class TestQuadSurd:
    def test_collapse_to_rational(self):
        assert make_surd(3, 0, 2, 5) == Fraction(3, 2)
        assert make_surd(1, 2, 1, 9) == 7  # sqrt(9) folds in
        assert make_surd(1, 1, 2, 0) == Fraction(1, 2)

    def test_arithmetic(self):
        phi = make_surd(1, 1, 2, 5)  # golden ratio
        assert phi * phi == phi + 1
        assert (phi - Fraction(1, 2)) * 2 == make_surd(0, 1, 1, 5)
        assert 1 / phi == phi - 1
        assert float(phi) == pytest.approx(1.6180339887498949)

    def test_division_by_zero(self):
        phi = make_surd(1, 1, 2, 5)
        with pytest.raises(ZeroDivisionError):
            phi / 0
        with pytest.raises(ZeroDivisionError):
            phi / Fraction(0)

    def test_signs(self):
        root5 = make_surd(0, 1, 1, 5)
        assert value_sign(2 - root5) == -1
        assert value_sign(3 - root5) == 1
        assert value_sign(root5 - root5) == 0
        assert (2 + root5) > 4
        assert (2 + root5) < Fraction(17, 4)

    def test_equality_across_radicand_representations(self):
        assert make_surd(0, 1, 1, 8) == make_surd(0, 2, 1, 2)  # sqrt(8) = 2 sqrt(2)
        assert make_surd(1, 1, 2, 12) == make_surd(1, 2, 2, 3)
        assert make_surd(0, 1, 1, 8) != make_surd(0, 1, 1, 2)
        assert make_surd(0, 1, 1, 8) != make_surd(0, -2, 1, 2)

    def test_incompatible_radicands(self):
        with pytest.raises(ValueError):
            make_surd(0, 1, 1, 2) + make_surd(0, 1, 1, 3)

    @settings(max_examples=150)
    @given(
        st.integers(-50, 50),
        st.integers(-50, 50),
        st.integers(1, 20),
        st.integers(-50, 50),
        st.integers(-50, 50),
        st.integers(1, 20),
        st.sampled_from([2, 3, 5, 7, 10, 61]),
    )
    def test_field_axioms(self, p1, q1, r1, p2, q2, r2, m):
        x = make_surd(p1, q1, r1, m)
        y = make_surd(p2, q2, r2, m)
        z = make_surd(1, 1, 3, m)
        assert x + y == y + x
        assert x * y == y * x
        assert z * (x + y) == z * x + z * y
        assert (x - y) + y == x
        if value_sign(y) != 0:
            assert (x / y) * y == x
        # sign agrees with floating evaluation away from zero
        fx = float(x)
        if abs(fx) > 1e-6:
            assert value_sign(x) == (1 if fx > 0 else -1)


class TestSpectrum:
    def test_generalized_quadrangle(self):
        s = spectrum(SrgParams.of(15, 6, 1, 3))
        assert (s.r1, s.r2, s.n1, s.n2) == (1, -3, 9, 5)

    def test_sixtythree_vertices(self):
        s = spectrum(SrgParams.of(63, 32, 16, 16))
        assert (s.r1, s.r2, s.n1, s.n2) == (4, -4, 27, 35)
        # trace: 32 + 27*4 + 35*(-4) = 0
        assert 32 + s.n1 * s.r1 + s.n2 * s.r2 == 0

    def test_pentagon_surd_spectrum(self):
        s = spectrum(SrgParams.of(5, 2, 0, 1))
        assert s.r1 == make_surd(-1, 1, 2, 5)
        assert s.r2 == make_surd(-1, -1, 2, 5)
        assert s.n1 == 2 and s.n2 == 2
        assert not s.is_rational

    def test_negative_discriminant_rejected(self):
        with pytest.raises(ValueError):
            spectrum(SrgParams.of(10, 1, 5, 5))


class TestKrein:
    def test_hand_values(self):
        assert krein(SrgParams.of(15, 6, 1, 3)) == (26, 6)

    def test_nonnegative_case(self):
        k1, k2 = krein(SrgParams.of(63, 32, 16, 16))
        assert k1 >= 0 and k2 >= 0

    def test_swap_symmetry(self):
        """Exchanging r1 and r2 in the Krein expressions exchanges K1, K2."""
        p = SrgParams.of(15, 6, 1, 3)
        s = spectrum(p)

        def side(k, ra, rb):
            return (k + ra) * (rb + 1) ** 2 - (ra + 1) * (k + ra + 2 * s.r1 * s.r2)

        k1, k2 = krein(p)
        assert k1 == side(p.k, s.r1, s.r2)
        assert k2 == side(p.k, s.r2, s.r1)

    def test_pentagon_exact_zero(self):
        # conference graphs sit exactly on the Krein boundary
        k1, k2 = krein(SrgParams.of(5, 2, 0, 1))
        assert k1 == 0 and k2 == 0


class TestConsistency:
    def test_known_good(self):
        assert consistency_check(SrgParams.of(15, 6, 1, 3)).ok
        assert consistency_check(SrgParams.of(63, 32, 16, 16)).ok

    def test_counting_identity_fails(self):
        res = consistency_check(SrgParams.of(10, 3, 1, 1))
        assert not res.ok
        assert any("counting identity" in w for w in res.witnesses)

    def test_non_integer_parameter(self):
        res = consistency_check(SrgParams.of(11, 5, Fraction(3, 2), Fraction(5, 2)))
        assert not res.ok
        assert any("not an integer" in w for w in res.witnesses)

    def test_irrational_multiplicities(self):
        # conference pattern with even v-1 gives irrational multiplicities
        res = consistency_check(SrgParams.of(6, 3, 1, 2))
        assert not res.ok


class TestConference:
    def test_examples(self):
        assert is_conference(SrgParams.of(5, 2, 0, 1))
        assert not is_conference(SrgParams.of(15, 6, 1, 3))
        assert is_conference(SrgParams.of(13, 6, 2, 3))


class TestEtfDerivedCrossChecks:
    """The generic spectrum/Krein route agrees exactly with the closed
    forms known for frame-derived graphs."""

    @pytest.mark.parametrize("d", [3, 5, 6, 7, 9, 13, 22])
    def test_closed_forms(self, d):
        for n in range(d + 2, d * (d + 1) // 2 + 1):
            derived = etf_srg(d, n)
            root = _etf_root(d, n)
            k1, k2 = krein(derived.params)
            quad = Fraction(n * n - (2 * d + 1) * n + d * d - d)
            closed_k1 = Fraction(n, 8 * d * d) * root * (root - 1) * quad
            closed_k2 = (
                Fraction(n, 8 * d * (n - d))
                * (n - 1 + root)
                * Fraction(d * d + d - 2 * n)
            )
            assert k1 == closed_k1, (d, n)
            assert k2 == closed_k2, (d, n)

    @pytest.mark.parametrize("d,n", [(6, 16), (7, 28), (3, 6), (22, 176), (5, 10), (6, 14)])
    def test_trace_identities(self, d, n):
        derived = etf_srg(d, n)
        s = spectrum(derived.params)
        v, k = derived.params.v, derived.params.k
        assert 1 + s.n1 + s.n2 == v
        assert k + s.n1 * s.r1 + s.n2 * s.r2 == 0


def _etf_root(d: int, n: int):
    """sqrt(d(n-1)/(n-d)) as an exact value."""
    rad = Fraction(d * (n - 1), n - d)
    from packcert.arith import rational_sqrt

    root = rational_sqrt(rad)
    if root is not None:
        return root
    return make_surd(0, 1, rad.denominator, rad.numerator * rad.denominator)
