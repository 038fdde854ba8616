"""
Unit tests for the filtration commutator and the similitude adjustment
"""

import random

import pytest

from src.exceptions import NotInvertible, SimilitudeMismatch
from src.services.symplectic import (
    AdElement,
    RingMatrix,
    adjustment_matrix,
    bracket,
    filtration_commutator,
    filtration_commutator_check,
    filtration_lift,
    leading_term,
    random_gsp4,
    similitude,
    similitude_adjust,
)
from src.services.symplectic.lifting import random_ad_element, random_matrix


@pytest.fixture
def rng():
    return random.Random(42)


class TestFiltrationLift:
    """Tests for filtration_lift() and leading_term()."""

    def test_leading_term_recovers_x(self, rng):
        x = random_ad_element(5, rng)
        S = random_matrix(5, 4, rng)
        lifted = filtration_lift(x, S, 2, 4)
        assert lifted.at_precision(2) == RingMatrix.identity(5, 2)
        assert leading_term(lifted, 2) == x.matrix

    def test_leading_term_rejects(self):
        m = RingMatrix.diag((2, 1, 1, 1), 5, 2)
        with pytest.raises(ValueError, match="not 1 mod p"):
            leading_term(m, 1)


class TestFiltrationCommutator:
    """Tests for filtration_commutator_check()."""

    @pytest.mark.parametrize("p", [3, 5, 37])
    def test_random_rounds(self, p, rng):
        for _ in range(20):
            l, m = rng.randint(1, 3), rng.randint(1, 3)
            c, d = random_ad_element(p, rng), random_ad_element(p, rng)
            S, T = random_matrix(p, l + m + 1, rng), random_matrix(p, l + m + 1, rng)
            assert filtration_commutator_check(c, d, S, T, l, m)

    def test_independent_of_higher_terms(self, rng):
        c, d = random_ad_element(5, rng), random_ad_element(5, rng)
        zero = RingMatrix.zero(5, 4)
        S, T = random_matrix(5, 4, rng), random_matrix(5, 4, rng)
        assert filtration_commutator(c, d, S, T, 1, 2) == filtration_commutator(c, d, zero, zero, 1, 2)

    def test_leading_term_is_bracket(self):
        c, d = AdElement.root(7, (1, 1)), AdElement.root(7, (-1, -1))
        zero = RingMatrix.zero(7, 3)
        commutator = filtration_commutator(c, d, zero, zero, 1, 1)
        assert leading_term(commutator, 2) == bracket(c, d).matrix

    def test_check_compares_leading_term(self, monkeypatch):
        """A wrong bracket at level l + m is caught."""
        c, d = AdElement.root(5, (1, 1)), AdElement.root(5, (-1, -1))
        zero = RingMatrix.zero(5, 3)
        assert filtration_commutator_check(c, d, zero, zero, 1, 1)
        monkeypatch.setattr(
            "src.services.symplectic.lifting.bracket",
            lambda x, y: AdElement.root(5, (2, 0)),
        )
        assert not filtration_commutator_check(c, d, zero, zero, 1, 1)

    def test_levels_must_be_positive(self, rng):
        c = random_ad_element(5, rng)
        zero = RingMatrix.zero(5, 2)
        with pytest.raises(ValueError, match="positive"):
            filtration_commutator(c, c, zero, zero, 0, 1)


class TestSimilitudeAdjust:
    """Tests for similitude_adjust()."""

    def test_identity(self):
        """psi = 1 + 3*5 needs s = 3; (1 + 5)^3 = 16 mod 25."""
        s, adjusted = similitude_adjust(RingMatrix.identity(5, 2), 16)
        assert s == 3
        assert adjusted == RingMatrix.diag((16, 1, 1, 16), 5, 2)
        assert similitude(adjusted) == 16

    def test_no_adjustment_needed(self):
        R = RingMatrix.identity(37, 3)
        s, adjusted = similitude_adjust(R, 1)
        assert s == 0
        assert adjusted == R

    def test_random_inputs(self, rng):
        for p in (5, 37):
            for _ in range(25):
                m = rng.randint(1, 3)
                R = random_gsp4(p, m + 1, rng)
                psi = similitude(R) * (1 + rng.randrange(p) * p ** m) % p ** (m + 1)
                s, adjusted = similitude_adjust(R, psi)
                assert 0 <= s < p
                assert similitude(adjusted) == psi
                assert adjusted.at_precision(m) == R.at_precision(m)

    def test_adjustment_matrix_similitude(self):
        """nu(A) = 1 + p^m."""
        assert similitude(adjustment_matrix(5, 2)) == 26

    def test_mismatch(self):
        with pytest.raises(SimilitudeMismatch, match="differ mod"):
            similitude_adjust(RingMatrix.identity(5, 2), 2)

    def test_not_gsp4(self):
        with pytest.raises(SimilitudeMismatch, match="not in GSp4"):
            similitude_adjust(RingMatrix.diag((1, 2, 1, 1), 5, 2), 1)

    def test_psi_not_unit(self):
        with pytest.raises(NotInvertible):
            similitude_adjust(RingMatrix.identity(5, 2), 5)

    def test_needs_positive_m(self):
        with pytest.raises(ValueError, match="m >= 1"):
            similitude_adjust(RingMatrix.identity(5), 1)
