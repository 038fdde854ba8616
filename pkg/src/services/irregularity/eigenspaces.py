"""
Eigenspace exponents of the mod-p class group of Q(mu_p) from Bernoulli residues.

Convention: for odd i in [3, p - 2], C(chi^i) != 0 iff p | B_{p-i}.
Even eigenspaces are taken to vanish (Vandiver), and C(chi) = 0.
"""

from typing import FrozenSet, List

from src.services.modarith import PrimeContext
from .models import IrregularityData

EIGENSPACE_CONVENTION = (
    "eigenspace convention: C(chi^i) != 0 for odd i in [3, p-2] iff p | B_(p-i) "
    "(Herbrand-Ribet); exponent 1 excluded since C(chi) = 0"
)
VANDIVER_NOTE = "even eigenspaces assumed zero (Vandiver's conjecture, verified far beyond this range)"

# Reference worked example for p = 37: it names C(chi^7) as the nontrivial eigenspace
# and lists p - I(12,5) as {8, 11, 13, 18, 20, 25, 27, 39}.
REFERENCE_P = 37
REFERENCE_EXPONENT = 7
REFERENCE_PAIR = (12, 5)
REFERENCE_P_MINUS_I = (8, 11, 13, 18, 20, 25, 27, 39)


def irregular_indices(ctx: PrimeContext) -> List[int]:
    """Even k in [2, p - 3] with p | B_k, i.e. the irregular pairs (p, k)."""
    return sorted(k for k in ctx.bernoulli if ctx.is_zero(k))


def compute_E(ctx: PrimeContext) -> FrozenSet[int]:
    """{ i odd, 3 <= i <= p - 2 : B_(p-i) = 0 mod p }."""
    return frozenset(ctx.p - k for k in irregular_indices(ctx))


def irregularity_index(ctx: PrimeContext) -> int:
    return len(compute_E(ctx))


def compute_sets(ctx: PrimeContext) -> IrregularityData:
    p = ctx.p
    n = p - 1
    half = n // 2
    E = compute_E(ctx)
    E_star = frozenset((p - eps) % n for eps in E) - {0, half}
    E_bar = E_star | {0, 1, half}
    return IrregularityData(p=p, E=E, e_p=len(E), E_star=E_star, e=len(E_star), E_bar=E_bar)


def theorem_bound_holds(data: IrregularityData, strict: bool = True) -> bool:
    """4e + 8 < (p - 1)/2, or <= when strict is False."""
    lhs = 4 * data.e + 8
    return lhs < data.half if strict else lhs <= data.half


def convention_notes(data: IrregularityData) -> List[str]:
    notes = [EIGENSPACE_CONVENTION, VANDIVER_NOTE]
    if data.p == 3:
        notes.append("p = 3: (p-1)/2 = 1, so E_bar = {0, 1} has size e + 2")
    if data.p == REFERENCE_P and REFERENCE_EXPONENT not in data.E:
        notes.append(
            f"reference example for p={REFERENCE_P} names exponent {REFERENCE_EXPONENT} "
            f"for the nontrivial eigenspace; Bernoulli data gives E = {sorted(data.E)}"
        )
    return notes
