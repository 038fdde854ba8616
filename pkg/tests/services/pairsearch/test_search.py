"""
Unit tests for enumeration, counting and the equivalence scan
"""

import pytest
from sympy import primerange

from src.exceptions import ExhaustiveLimitExceeded, NotPrime
from src.services.irregularity import compute_sets, theorem_bound_holds
from src.services.modarith import PrimeContext
from src.services.pairsearch import (
    ExponentPair,
    condition_abc,
    count_lower_bound,
    count_valid_pairs,
    enumerate_valid_pairs,
    find_pair,
    guard_exhaustive,
    line_census,
    surviving_points,
    verify_lemma54,
)


def irr_for(p):
    return compute_sets(PrimeContext.build(p))


@pytest.fixture
def irr37():
    return irr_for(37)


class TestCountLowerBound:
    """Tests for count_lower_bound()."""

    @pytest.mark.parametrize("p, e, expected", [(37, 1, 216), (17, 0, 0), (3, 0, -14)])
    def test_values(self, p, e, expected):
        assert count_lower_bound(p, e) == expected


class TestGuard:
    """Tests for guard_exhaustive()."""

    def test_limit_from_env(self, monkeypatch):
        monkeypatch.setenv("GSP4_MAX_EXHAUSTIVE_P", "30")
        with pytest.raises(ExhaustiveLimitExceeded, match="allow_large"):
            guard_exhaustive(31)
        guard_exhaustive(31, allow_large=True)
        guard_exhaustive(29)

    def test_enumeration_respects_limit(self, monkeypatch, irr37):
        monkeypatch.setenv("GSP4_MAX_EXHAUSTIVE_P", "30")
        with pytest.raises(ExhaustiveLimitExceeded):
            enumerate_valid_pairs(37, irr37)
        assert enumerate_valid_pairs(37, irr37, allow_large=True)


class TestEnumerate:
    """Tests for enumerate_valid_pairs() and count_valid_pairs()."""

    def test_p37_contains_reference_pairs(self, irr37):
        pairs = [q.as_tuple() for q in enumerate_valid_pairs(37, irr37)]
        assert (12, 5) in pairs
        assert (1, 6) in pairs
        assert pairs == sorted(pairs)

    def test_every_pair_is_odd_and_satisfies_c(self, irr37):
        for q in enumerate_valid_pairs(37, irr37):
            assert q.odd
            assert condition_abc(q, irr37) == (True, True, True)

    def test_count_matches_enumeration(self, irr37):
        count = count_valid_pairs(37, irr37)
        assert count == len(enumerate_valid_pairs(37, irr37))
        assert count >= count_lower_bound(37, 1)

    def test_symmetry(self):
        """(a, b) valid iff (b, a) valid iff (-a, b) valid."""
        irr = irr_for(41)
        valid = {q.as_tuple() for q in enumerate_valid_pairs(41, irr)}
        n = 40
        for a, b in valid:
            assert (b, a) in valid
            assert ((-a) % n, b) in valid

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_small_primes_empty(self, p):
        assert enumerate_valid_pairs(p, irr_for(p)) == []


class TestFindPair:
    """Tests for find_pair()."""

    def test_p37_least_pair(self):
        assert find_pair(37).as_tuple() == (1, 4)

    def test_p13(self):
        """A witness exists although 4e + 8 < (p-1)/2 fails."""
        assert find_pair(13).as_tuple() == (1, 4)

    @pytest.mark.parametrize("p", [5, 7])
    def test_none(self, p):
        assert find_pair(p) is None

    def test_p101(self):
        irr = irr_for(101)
        assert theorem_bound_holds(irr)
        assert find_pair(101, irr) is not None

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            find_pair(4)


class TestSurvivingPoints:
    """Tests for surviving_points()."""

    def test_p37_regular_survivors(self):
        survivors = set(surviving_points(37, [0, 1, 18]))
        n = 36
        for a, b in [(1, 6), (1, 7), (2, 4), (5, 1)]:
            for sa in (1, -1):
                for sb in (1, -1):
                    assert ((sa * a) % n, (sb * b) % n) in survivors

    def test_no_point_on_an_excluded_line(self):
        for a, b in surviving_points(37, [0, 1, 18]):
            assert (2 * a) % 36 not in {0, 1, 35, 18}
            assert (b - a) % 36 not in {0, 1, 35, 18}


class TestLineCensus:
    """Tests for line_census()."""

    def test_p37(self, irr37):
        census = line_census(37, irr37)
        assert [row.epsilon for row in census.rows] == [0, 1, 18, 32]
        assert [row.proof_bound for row in census.rows] == [72, 144, 72, 144]
        assert all(row.exact_points <= row.proof_bound for row in census.rows)
        assert census.odd_points == 648
        assert census.valid_count == 648 - census.union_points
        assert census.valid_count == count_valid_pairs(37, irr37)
        assert census.lower_bound == 216

    @pytest.mark.slow
    def test_counting_bound_up_to_200(self):
        for p in primerange(3, 201):
            irr = irr_for(p)
            census = line_census(p, irr)
            assert census.valid_count >= count_lower_bound(p, irr.e), p
            assert census.union_points <= 4 * (p - 1) * (2 + irr.e), p
            if theorem_bound_holds(irr):
                assert census.valid_count > 0, p


class TestLemma54:
    """Tests for verify_lemma54()."""

    def test_p37(self, irr37):
        report = verify_lemma54(37, irr37)
        assert report.pairs_scanned == 1296
        assert report.odd_pairs == 648
        assert report.mismatches == 0
        assert report.odd_valid == count_valid_pairs(37, irr37)

    def test_p5(self):
        report = verify_lemma54(5, irr_for(5))
        assert report.pairs_scanned == 16
        assert (report.valid_123, report.valid_abc) == (0, 0)

    def test_p3(self):
        report = verify_lemma54(3, irr_for(3))
        assert report.pairs_scanned == 4
        assert report.mismatches == 0

    @pytest.mark.slow
    @pytest.mark.parametrize("p", list(primerange(3, 201)))
    def test_sweep(self, p):
        assert verify_lemma54(p, irr_for(p)).mismatches == 0
