"""
Conditions on an exponent pair: (1)-(3) on the set I, and (a)-(c) as
equations modulo p - 1.
"""

from typing import AbstractSet, FrozenSet, Iterable, List, Tuple

from src.services.irregularity import IrregularityData
from .models import DELTA_SET, ExponentPair, ISet


def raw_i(alpha: int, beta: int, n: int) -> Tuple[int, ...]:
    return tuple((d1 * alpha + d2 * beta) % n for d1, d2 in DELTA_SET)


def i_set(pair: ExponentPair) -> ISet:
    raw = raw_i(pair.alpha, pair.beta, pair.modulus)
    return ISet(raw=raw, elements=frozenset(raw))


def p_minus_i(pair: ExponentPair) -> List[int]:
    """(p - eps) mod (p - 1) for eps in I, sorted."""
    n = pair.modulus
    return sorted({(pair.p - eps) % n for eps in i_set(pair).elements})


def conditions_123_for(alpha: int, beta: int, p: int, E: AbstractSet[int]) -> Tuple[bool, bool, bool]:
    n = p - 1
    elements = set(raw_i(alpha, beta, n))
    c1 = len(elements) == 8
    c2 = 1 % n not in elements
    c3 = all((p - eps) % n not in E for eps in elements)
    return c1, c2, c3


def condition_123(pair: ExponentPair, irr: IrregularityData) -> Tuple[bool, bool, bool]:
    if irr.p != pair.p:
        raise ValueError(f"prime mismatch: pair p={pair.p}, data p={irr.p}")
    return conditions_123_for(pair.alpha, pair.beta, pair.p, irr.E)


def signed_residues(epsilons: Iterable[int], n: int) -> FrozenSet[int]:
    """{ +eps, -eps mod n : eps in epsilons }."""
    out = set()
    for eps in epsilons:
        out.add(eps % n)
        out.add(-eps % n)
    return frozenset(out)


def conditions_abc_for(alpha: int, beta: int, n: int, pm: AbstractSet[int]) -> Tuple[bool, bool, bool]:
    """(a), (b), (c) for raw residues; pm is the signed epsilon set."""
    a = (2 * alpha) % n not in pm and (2 * beta) % n not in pm
    b = (beta - alpha) % n not in pm and (beta + alpha) % n not in pm
    c = (
        beta % n not in {(3 * alpha) % n, (-3 * alpha) % n}
        and (3 * beta) % n not in {alpha % n, -alpha % n}
    )
    return a, b, c


def condition_abc(pair: ExponentPair, irr: IrregularityData) -> Tuple[bool, bool, bool]:
    if irr.p != pair.p:
        raise ValueError(f"prime mismatch: pair p={pair.p}, data p={irr.p}")
    n = pair.modulus
    return conditions_abc_for(pair.alpha, pair.beta, n, signed_residues(irr.E_bar, n))
