import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from packcert.arith import (
    SqrtResult,
    binomial,
    cmp_surd,
    int_sqrt,
    rational_sqrt,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=100
)


class TestBinomial:
    @pytest.mark.parametrize(
        "a,b,expected", [(7, 3, 35), (5, 0, 1), (4, 6, 0), (0, 0, 1), (64, 32, 1832624140942590534)]
    )
    def test_values(self, a, b, expected):
        assert binomial(a, b) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 2)
        with pytest.raises(ValueError):
            binomial(3, -2)

    @given(st.integers(0, 64), st.integers(0, 64))
    def test_pascal_rule(self, a, b):
        if a >= 1 and b >= 1:
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


class TestIntSqrt:
    @pytest.mark.parametrize(
        "x,expected",
        [(25, SqrtResult(5, True)), (26, SqrtResult(5, False)), (0, SqrtResult(0, True))],
    )
    def test_values(self, x, expected):
        assert int_sqrt(x) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            int_sqrt(-1)

    @given(st.integers(0, 10**40))
    def test_floor_bracketing(self, x):
        r = int_sqrt(x)
        assert r.floor_root**2 <= x < (r.floor_root + 1) ** 2
        assert r.is_exact == (r.floor_root**2 == x)


class TestRationalSqrt:
    @pytest.mark.parametrize(
        "x,expected",
        [
            (Fraction(1, 4), Fraction(1, 2)),
            (Fraction(3, 8), None),
            (Fraction(9, 25), Fraction(3, 5)),
            (Fraction(0), Fraction(0)),
        ],
    )
    def test_values(self, x, expected):
        assert rational_sqrt(x) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            rational_sqrt(Fraction(-1, 4))

    @given(st.fractions(min_value=Fraction(0), max_value=Fraction(500), max_denominator=60))
    def test_square_roundtrip(self, x):
        root = rational_sqrt(x * x)
        assert root == abs(x)
        r = rational_sqrt(x)
        if r is not None:
            assert r * r == x


class TestCmpSurd:
    def test_boundary_values(self):
        # q = a + sqrt(b) exactly: 13/2 + 7/2 = 10
        assert cmp_surd(10, Fraction(13, 2), Fraction(49, 4)) == 0
        assert cmp_surd(11, Fraction(13, 2), Fraction(49, 4)) == 1
        assert cmp_surd(9, Fraction(13, 2), Fraction(49, 4)) == -1

    def test_zero_radicand(self):
        assert cmp_surd(Fraction(3, 7), Fraction(3, 7), 0) == 0
        assert cmp_surd(1, 2, 0) == -1

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            cmp_surd(1, 1, -1)

    def test_float_oracle_cross_check(self):
        """1000 random triples, compared against double evaluation away
        from the decision boundary."""
        rng = random.Random(20260810)
        checked = 0
        while checked < 1000:
            q = Fraction(rng.randint(-500, 500), rng.randint(1, 40))
            a = Fraction(rng.randint(-500, 500), rng.randint(1, 40))
            b = Fraction(rng.randint(0, 900), rng.randint(1, 40))
            approx = float(q) - (float(a) + math.sqrt(float(b)))
            if abs(approx) <= 1e-6:
                continue
            expected = 1 if approx > 0 else -1
            assert cmp_surd(q, a, b) == expected, (q, a, b)
            checked += 1
