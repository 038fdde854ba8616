"""
Exhaustive scans of the plane (Z/(p-1))^2.
"""

from typing import Iterable, List, Optional, Tuple

import numpy as np
from loguru import logger

from src.config import get_settings
from src.exceptions import EquivalenceViolation, ExhaustiveLimitExceeded
from src.services.irregularity import IrregularityData, compute_sets
from src.services.modarith import PrimeContext, require_odd_prime
from .conditions import conditions_123_for, conditions_abc_for, signed_residues
from .models import CensusRow, ExponentPair, Lemma54Report, LineCensus


def guard_exhaustive(p: int, allow_large: bool = False) -> None:
    """Raises ExhaustiveLimitExceeded above GSP4_MAX_EXHAUSTIVE_P unless allow_large."""
    limit = get_settings().GSP4_MAX_EXHAUSTIVE_P
    if p > limit and not allow_large:
        raise ExhaustiveLimitExceeded(
            f"p={p} exceeds the exhaustive-scan limit {limit}; pass allow_large to override"
        )


def count_lower_bound(p: int, e: int) -> int:
    """(p-1)^2/2 - 4(p-1)(2+e)."""
    n = p - 1
    return n * n // 2 - 4 * n * (2 + e)


def _grid(n: int) -> Tuple[np.ndarray, np.ndarray]:
    axis = np.arange(n, dtype=np.int64)
    return axis[:, None], axis[None, :]


def _line_mask(n: int, epsilons: Iterable[int]) -> np.ndarray:
    """Points on 2x = +-eps, 2y = +-eps or y = +-x +- eps for some eps."""
    signed = np.zeros(n, dtype=bool)
    signed[sorted(signed_residues(epsilons, n))] = True
    x, y = _grid(n)
    doubled = signed[(2 * np.arange(n)) % n]
    return doubled[x] | doubled[y] | signed[(y - x) % n] | signed[(y + x) % n]


def _odd_mask(n: int) -> np.ndarray:
    x, y = _grid(n)
    return (x + y) % 2 == 1


def _valid_mask(irr: IrregularityData) -> np.ndarray:
    n = irr.p - 1
    return _odd_mask(n) & ~_line_mask(n, irr.E_bar)


def enumerate_valid_pairs(
    p: int,
    irr: IrregularityData,
    allow_large: bool = False,
) -> List[ExponentPair]:
    """All pairs with alpha + beta odd satisfying (a) and (b), lexicographic."""
    guard_exhaustive(p, allow_large)
    return [
        ExponentPair(alpha=int(a), beta=int(b), p=p)
        for a, b in np.argwhere(_valid_mask(irr))
    ]


def count_valid_pairs(p: int, irr: IrregularityData, allow_large: bool = False) -> int:
    guard_exhaustive(p, allow_large)
    return int(_valid_mask(irr).sum())


def find_pair(
    p: int,
    irr: Optional[IrregularityData] = None,
    allow_large: bool = False,
) -> Optional[ExponentPair]:
    """Lexicographically least valid pair, or None."""
    require_odd_prime(p)
    if irr is None:
        irr = compute_sets(PrimeContext.build(p))
    guard_exhaustive(p, allow_large)
    hits = np.argwhere(_valid_mask(irr))
    if len(hits) == 0:
        logger.info(f"p={p}: no valid pair")
        return None
    a, b = hits[0]
    return ExponentPair(alpha=int(a), beta=int(b), p=p)


def surviving_points(p: int, epsilons: Iterable[int]) -> List[Tuple[int, int]]:
    """Points of any parity satisfying (a), (b), (c) for the given epsilons."""
    require_odd_prime(p)
    n = p - 1
    x, y = _grid(n)
    on_c_lines = (
        (y == (3 * x) % n) | (y == (-3 * x) % n)
        | ((3 * y) % n == x) | ((3 * y) % n == (-x) % n)
    )
    keep = ~_line_mask(n, list(epsilons)) & ~on_c_lines
    return [(int(a), int(b)) for a, b in np.argwhere(keep)]


def _proof_bound(eps: int, n: int) -> int:
    if eps == 0:
        return 2 * n
    if eps == 1:
        return 4 * n
    if eps == n // 2:
        return 2 * n
    return 4 * n


def line_census(p: int, irr: IrregularityData, allow_large: bool = False) -> LineCensus:
    """Exact odd-parity point counts per epsilon against the counting-proof bounds."""
    guard_exhaustive(p, allow_large)
    n = p - 1
    odd = _odd_mask(n)
    rows = [
        CensusRow(
            epsilon=eps,
            exact_points=int((odd & _line_mask(n, [eps])).sum()),
            proof_bound=_proof_bound(eps, n),
        )
        for eps in sorted(irr.E_bar)
    ]
    union = int((odd & _line_mask(n, irr.E_bar)).sum())
    odd_points = int(odd.sum())
    return LineCensus(
        p=p,
        e=irr.e,
        odd_points=odd_points,
        rows=rows,
        union_points=union,
        valid_count=odd_points - union,
        lower_bound=count_lower_bound(p, irr.e),
    )


def verify_lemma54(p: int, irr: IrregularityData, allow_large: bool = False) -> Lemma54Report:
    """Compare (1)-(3) with (a)-(c) on every pair, and with (a),(b) on odd pairs.

    Raises:
        EquivalenceViolation: With the first disagreeing pair.
    """
    guard_exhaustive(p, allow_large)
    n = p - 1
    signed = signed_residues(irr.E_bar, n)
    valid_123 = valid_abc = odd_pairs = odd_valid = 0
    mismatches: List[Tuple[int, int, str]] = []

    for alpha in range(n):
        for beta in range(n):
            ok_123 = all(conditions_123_for(alpha, beta, p, irr.E))
            a, b, c = conditions_abc_for(alpha, beta, n, signed)
            ok_abc = a and b and c
            valid_123 += ok_123
            valid_abc += ok_abc
            if ok_123 != ok_abc:
                mismatches.append((alpha, beta, f"(1)-(3)={ok_123}, (a)-(c)={ok_abc}"))
            if (alpha + beta) % 2 == 1:
                odd_pairs += 1
                odd_valid += ok_123
                if not c:
                    mismatches.append((alpha, beta, "odd pair violates (c)"))
                if ok_123 != (a and b):
                    mismatches.append((alpha, beta, f"(1)-(3)={ok_123}, (a),(b)={a and b}"))

    if mismatches:
        alpha, beta, detail = mismatches[0]
        logger.error(f"p={p}: {len(mismatches)} equivalence mismatches")
        raise EquivalenceViolation(p, alpha, beta, detail)

    logger.info(f"p={p}: {n * n} pairs, 0 mismatches")
    return Lemma54Report(
        p=p,
        pairs_scanned=n * n,
        valid_123=valid_123,
        valid_abc=valid_abc,
        odd_pairs=odd_pairs,
        odd_valid=odd_valid,
        mismatches=0,
    )
