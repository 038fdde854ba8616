"""
Unit tests for the two Bernoulli algorithms and PrimeContext
"""

import pytest
from pydantic import ValidationError
from sympy import primerange

from src.exceptions import NotPrime
from src.services.modarith import PrimeContext, bernoulli_recurrence, bernoulli_worpitzky


class TestBernoulliRecurrence:
    """Tests for bernoulli_recurrence()."""

    def test_p3_is_empty(self):
        """No even k in [2, 0]."""
        assert bernoulli_recurrence(3) == {}

    def test_p5(self):
        """B_2 = 1/6 = 1 mod 5."""
        assert bernoulli_recurrence(5) == {2: 1}

    def test_p7(self):
        """B_2 = 1/6 = 6 and B_4 = -1/30 = 3 mod 7."""
        assert bernoulli_recurrence(7) == {2: 6, 4: 3}

    def test_p37_single_zero(self):
        """37 divides B_32 and no other B_k with k <= 34."""
        table = bernoulli_recurrence(37)
        assert sorted(table) == list(range(2, 35, 2))
        assert [k for k, r in table.items() if r == 0] == [32]

    def test_p157_two_zeros(self):
        """157 divides B_62 and B_110."""
        table = bernoulli_recurrence(157)
        assert sorted(k for k, r in table.items() if r == 0) == [62, 110]

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            bernoulli_recurrence(9)


class TestBernoulliWorpitzky:
    """Tests for bernoulli_worpitzky()."""

    def test_p3_is_empty(self):
        assert bernoulli_worpitzky(3) == {}

    def test_small_values(self):
        assert bernoulli_worpitzky(5) == {2: 1}
        assert bernoulli_worpitzky(7) == {2: 6, 4: 3}

    @pytest.mark.parametrize("p", list(primerange(5, 110)))
    def test_agrees_with_recurrence(self, p):
        """Both algorithms give the same table."""
        assert bernoulli_worpitzky(p) == bernoulli_recurrence(p)

    @pytest.mark.slow
    def test_agrees_up_to_500(self):
        """Dual-oracle sweep; the irregular primes below 500 include 37, 59, 67, 101, 103."""
        irregular = []
        for p in primerange(5, 501):
            table = bernoulli_recurrence(p)
            assert bernoulli_worpitzky(p) == table, p
            if 0 in table.values():
                irregular.append(p)
        assert {37, 59, 67, 101, 103}.issubset(irregular)
        assert irregular[0] == 37


class TestPrimeContext:
    """Tests for PrimeContext."""

    def test_build_both_algorithms(self):
        recurrence = PrimeContext.build(37)
        worpitzky = PrimeContext.build(37, algorithm="worpitzky")
        assert recurrence == worpitzky
        assert recurrence.is_zero(32)
        assert not recurrence.is_zero(2)

    def test_not_prime_propagates(self):
        """The prime check is not wrapped in a ValidationError."""
        with pytest.raises(NotPrime):
            PrimeContext.build(4)
        with pytest.raises(NotPrime):
            PrimeContext(p=15, bernoulli={})

    def test_rejects_missing_keys(self):
        with pytest.raises(ValidationError, match="keys must be the even integers"):
            PrimeContext(p=7, bernoulli={2: 6})

    def test_rejects_out_of_range_residue(self):
        with pytest.raises(ValidationError, match="residues must lie"):
            PrimeContext(p=7, bernoulli={2: 6, 4: 7})

    def test_frozen(self):
        ctx = PrimeContext.build(5)
        with pytest.raises(ValidationError):
            ctx.p = 7
