"""
Unit tests for conditions (1)-(3) and (a)-(c)
"""

import pytest
from pydantic import ValidationError

from src.exceptions import OutOfRange
from src.services.irregularity import compute_sets
from src.services.modarith import PrimeContext
from src.services.pairsearch import (
    ExponentPair,
    condition_123,
    condition_abc,
    i_set,
    p_minus_i,
    signed_residues,
)


@pytest.fixture
def irr37():
    return compute_sets(PrimeContext.build(37))


def pair(alpha, beta, p=37):
    return ExponentPair(alpha=alpha, beta=beta, p=p)


class TestExponentPair:
    """Tests for ExponentPair."""

    def test_out_of_range(self):
        """OutOfRange propagates unwrapped."""
        with pytest.raises(OutOfRange, match=r"\[0, 36\)"):
            pair(36, 0)
        with pytest.raises(OutOfRange):
            pair(0, -1)

    def test_parity(self):
        assert pair(12, 5).odd
        assert not pair(1, 1).odd

    def test_frozen(self):
        with pytest.raises(ValidationError):
            pair(1, 2).alpha = 3


class TestISet:
    """Tests for i_set() and p_minus_i()."""

    def test_reference_pair(self):
        iset = i_set(pair(12, 5))
        assert iset.raw == (24, 12, 10, 26, 17, 7, 29, 19)
        assert iset.elements == {7, 10, 12, 17, 19, 24, 26, 29}

    def test_zero_pair(self):
        assert i_set(pair(0, 0)).elements == {0}

    def test_small_modulus(self):
        iset = i_set(pair(1, 1, p=5))
        assert iset.raw == (2, 2, 2, 2, 2, 0, 0, 2)
        assert iset.elements == {0, 2}

    def test_negation_closure(self):
        """eps in I iff -eps in I, for every pair mod 12."""
        n = 12
        for a in range(n):
            for b in range(n):
                elements = i_set(pair(a, b, p=13)).elements
                assert {(-x) % n for x in elements} == elements

    def test_p_minus_i_reference_pair(self):
        """The computed set contains 30, not 39."""
        assert p_minus_i(pair(12, 5)) == [8, 11, 13, 18, 20, 25, 27, 30]

    def test_serializes_sorted(self):
        assert i_set(pair(12, 5)).model_dump(mode="json")["elements"] == [7, 10, 12, 17, 19, 24, 26, 29]


class TestCondition123:
    """Tests for condition_123()."""

    def test_reference_pair(self, irr37):
        assert condition_123(pair(12, 5), irr37) == (True, True, True)

    def test_zero_pair(self, irr37):
        assert condition_123(pair(0, 0), irr37)[0] is False

    def test_one_in_i(self, irr37):
        """alpha - beta = 1 puts 1 in I."""
        assert condition_123(pair(1, 0), irr37)[1] is False

    def test_prime_mismatch(self, irr37):
        with pytest.raises(ValueError, match="prime mismatch"):
            condition_123(pair(1, 2, p=41), irr37)


class TestConditionABC:
    """Tests for condition_abc()."""

    def test_signed_residues(self):
        assert signed_residues({0, 1, 18, 32}, 36) == {0, 1, 35, 18, 32, 4}

    def test_reference_pair(self, irr37):
        assert condition_abc(pair(12, 5), irr37) == (True, True, True)

    def test_second_reference_pair(self, irr37):
        """(1, 6) also passes (a) and (b)."""
        a, b, _ = condition_abc(pair(1, 6), irr37)
        assert a and b

    def test_zero_alpha_fails_a(self, irr37):
        for k in (0, 5, 20):
            assert condition_abc(pair(0, k), irr37)[0] is False

    @pytest.mark.parametrize("p", [7, 11, 13, 37])
    def test_beta_three_alpha_fails_c(self, p):
        irr = compute_sets(PrimeContext.build(p))
        assert condition_abc(pair(1, 3, p=p), irr)[2] is False
