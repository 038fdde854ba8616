"""
Pydantic models for the exponent-pair search
"""

from typing import FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from src.exceptions import OutOfRange

# Weights (d1, d2) with |d1| + |d2| = 2; this order fixes the order of I_(alpha,beta).
DELTA_SET: Tuple[Tuple[int, int], ...] = (
    (2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (1, -1), (-1, 1), (-1, -1),
)


class ExponentPair(BaseModel):
    """Exponents (alpha, beta) of the diagonal representation, residues mod p - 1"""
    model_config = ConfigDict(frozen=True)

    alpha: int
    beta: int
    p: int

    @model_validator(mode="after")
    def _in_range(self) -> "ExponentPair":
        n = self.p - 1
        if not (0 <= self.alpha < n and 0 <= self.beta < n):
            raise OutOfRange(f"exponents must lie in [0, {n}), got ({self.alpha}, {self.beta})")
        return self

    @property
    def modulus(self) -> int:
        return self.p - 1

    @property
    def odd(self) -> bool:
        return (self.alpha + self.beta) % 2 == 1

    def as_tuple(self) -> Tuple[int, int]:
        return (self.alpha, self.beta)


class ISet(BaseModel):
    """I_(alpha,beta) = { d1*alpha + d2*beta : (d1, d2) in DELTA_SET } mod p - 1"""
    model_config = ConfigDict(frozen=True)

    raw: Tuple[int, ...] = Field(min_length=8, max_length=8)
    elements: FrozenSet[int]

    @model_validator(mode="after")
    def _dedup(self) -> "ISet":
        if set(self.elements) != set(self.raw):
            raise ValueError("elements must be the deduplication of raw")
        return self

    @field_serializer("elements")
    def _sorted(self, values: FrozenSet[int]) -> List[int]:
        return sorted(values)


class Lemma54Report(BaseModel):
    """Exhaustive comparison of conditions (1)-(3) with (a)-(c)"""
    p: int
    pairs_scanned: int
    valid_123: int
    valid_abc: int
    odd_pairs: int
    odd_valid: int
    mismatches: int = 0


class CensusRow(BaseModel):
    """Odd-parity points on the lines of one epsilon"""
    epsilon: int
    exact_points: int
    proof_bound: int


class LineCensus(BaseModel):
    p: int
    e: int
    odd_points: int
    rows: List[CensusRow]
    union_points: int
    valid_count: int
    lower_bound: int
