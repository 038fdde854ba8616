from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from src.services.pairsearch import LineCensus


class IrregularRow(BaseModel):
    """One line of the irregular-prime table"""
    p: int
    e_p: int
    E: List[int]
    irregular_indices: List[int]
    oracles_agree: Optional[bool] = None  # set only with --verify


class Report(BaseModel):
    """Certificate for one prime: irregularity data, a witness pair and the checks behind it"""
    p: int
    e_p: int
    e: int
    E: List[int]
    E_star: List[int]
    E_bar: List[int]
    strict_bound: bool = True
    bound_holds: bool
    witness_pair: Optional[Tuple[int, int]] = None
    i_set: Optional[List[int]] = None
    p_minus_i_set: Optional[List[int]] = None
    valid_pair_count: int
    lower_bound: int
    lemma54_mismatches: int = 0
    lie_checks_passed: bool
    convention_notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _witness_when_bound_holds(self) -> "Report":
        # With <= the count bound can be exactly 0, so only the strict bound guarantees a witness
        if self.bound_holds and self.strict_bound and self.witness_pair is None:
            raise ValueError(f"bound holds for p={self.p} but no witness pair was found")
        if (self.witness_pair is None) != (self.i_set is None):
            raise ValueError("i_set is reported exactly when a witness exists")
        if self.lemma54_mismatches < 0:
            raise ValueError("lemma54_mismatches must be non-negative")
        return self


class PairReport(BaseModel):
    """Hypotheses (1)-(3), parity and the (a)-(c) forms for one exponent pair"""
    p: int
    alpha: int
    beta: int
    alpha_plus_beta_odd: bool
    condition_1: bool
    condition_2: bool
    condition_3: bool
    condition_a: bool
    condition_b: bool
    condition_c: bool
    hypotheses_hold: bool
    i_set: List[int]
    raw_i: List[int]
    p_minus_i_set: List[int]
    E: List[int]
    E_bar: List[int]
    convention_notes: List[str] = Field(default_factory=list)


class CountReport(BaseModel):
    """Exhaustive count of valid odd pairs against the counting-proof bound"""
    p: int
    e: int
    bound_holds: bool
    valid_pair_count: int
    lower_bound: int
    census: LineCensus
