"""
Pydantic models for irregularity data
"""

from typing import FrozenSet, List

from pydantic import BaseModel, ConfigDict, field_serializer, model_validator


class IrregularityData(BaseModel):
    """The exponent sets E, E*, E-bar of one prime and their sizes"""
    model_config = ConfigDict(frozen=True)

    p: int
    E: FrozenSet[int]
    e_p: int
    E_star: FrozenSet[int]
    e: int
    E_bar: FrozenSet[int]

    @model_validator(mode="after")
    def _invariants(self) -> "IrregularityData":
        n = self.p - 1
        half = n // 2
        if any(eps % 2 == 0 for eps in self.E):
            raise ValueError("E must contain odd exponents only")
        if self.e_p != len(self.E) or self.e != len(self.E_star):
            raise ValueError("e_p and e must be the sizes of E and E_star")
        expected_star = {(self.p - eps) % n for eps in self.E} - {0, half}
        if set(self.E_star) != expected_star:
            raise ValueError("E_star must be {p - eps mod p-1} minus {0, (p-1)/2}")
        if set(self.E_bar) != set(self.E_star) | {0, 1, half}:
            raise ValueError("E_bar must be E_star together with 0, 1, (p-1)/2")
        if self.p >= 5:
            # p - eps is even for odd eps, so 1 never lands in E_star
            if 1 in self.E_star or len(self.E_bar) != self.e + 3:
                raise ValueError("E_bar must be a disjoint union of size e + 3")
        if self.e > self.e_p:
            raise ValueError("e cannot exceed e_p")
        return self

    @field_serializer("E", "E_star", "E_bar")
    def _sorted(self, values: FrozenSet[int]) -> List[int]:
        return sorted(values)

    @property
    def half(self) -> int:
        return (self.p - 1) // 2
