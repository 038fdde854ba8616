"""
Exponent-pair search: conditions (1)-(3), (a)-(c), enumeration and counting
"""

from .conditions import condition_123, condition_abc, i_set, p_minus_i, signed_residues
from .models import DELTA_SET, CensusRow, ExponentPair, ISet, Lemma54Report, LineCensus
from .search import (
    count_lower_bound,
    count_valid_pairs,
    enumerate_valid_pairs,
    find_pair,
    guard_exhaustive,
    line_census,
    surviving_points,
    verify_lemma54,
)

__all__ = [
    "DELTA_SET",
    "CensusRow",
    "ExponentPair",
    "ISet",
    "Lemma54Report",
    "LineCensus",
    "condition_123",
    "condition_abc",
    "count_lower_bound",
    "count_valid_pairs",
    "enumerate_valid_pairs",
    "find_pair",
    "guard_exhaustive",
    "i_set",
    "line_census",
    "p_minus_i",
    "signed_residues",
    "surviving_points",
    "verify_lemma54",
]
