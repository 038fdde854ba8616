"""
Exact modular arithmetic helpers.
"""

from math import gcd
from typing import List, Sequence

from sympy import isprime

from src.exceptions import NotInvertible, NotPrime


def require_odd_prime(p: int) -> int:
    """Return p unchanged if it is an odd prime, raise NotPrime otherwise."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 3 or not isprime(p):
        raise NotPrime(f"{p!r} is not an odd prime")
    return p


def mod_pow(a: int, e: int, n: int) -> int:
    """a^e mod n by repeated squaring; 0^0 = 1."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = 1 % n
    base = a % n
    while e:
        if e & 1:
            result = result * base % n
        base = base * base % n
        e >>= 1
    return result


def mod_inv(a: int, n: int) -> int:
    """Inverse of a modulo n.

    Raises:
        NotInvertible: If gcd(a, n) != 1.
    """
    if gcd(a, n) != 1:
        raise NotInvertible(f"{a} is not a unit modulo {n}")
    return pow(a, -1, n)


def matrix_rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    work: List[List[int]] = [[x % p for x in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = mod_inv(work[rank][col], p)
        work[rank] = [x * inv % p for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [(x - factor * y) % p for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
