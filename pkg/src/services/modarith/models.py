"""
Pydantic models for modular arithmetic
"""

from typing import Dict, Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .arithmetic import require_odd_prime
from .bernoulli import ALGORITHMS


class PrimeContext(BaseModel):
    """An odd prime with its Bernoulli residues B_k mod p, k even in [2, p - 3]"""
    model_config = ConfigDict(frozen=True)

    p: int
    bernoulli: Dict[int, int]

    @field_validator("p")
    @classmethod
    def _odd_prime(cls, p: int) -> int:
        require_odd_prime(p)
        return p

    @model_validator(mode="after")
    def _table_shape(self) -> "PrimeContext":
        expected = set(range(2, self.p - 2, 2))
        if set(self.bernoulli) != expected:
            raise ValueError(f"keys must be the even integers in [2, {self.p - 3}]")
        if any(not 0 <= r < self.p for r in self.bernoulli.values()):
            raise ValueError(f"residues must lie in [0, {self.p})")
        return self

    @classmethod
    def build(
        cls,
        p: int,
        algorithm: Literal["recurrence", "worpitzky"] = "recurrence",
    ) -> "PrimeContext":
        """Compute the table with the chosen algorithm.

        Raises:
            NotPrime: If p is not an odd prime.
        """
        require_odd_prime(p)
        return cls(p=p, bernoulli=ALGORITHMS[algorithm](p))

    def is_zero(self, k: int) -> bool:
        """True when p | B_k (k even in [2, p - 3])."""
        return self.bernoulli[k] == 0
