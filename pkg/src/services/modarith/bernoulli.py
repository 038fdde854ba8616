"""
Two independent algorithms for the table B_k mod p, k even in [2, p - 3].

Convention: B_1 = -1/2. Every B_k with k <= p - 2 is p-integral, so all
arithmetic stays in F_p.
"""

from typing import Dict, List

from loguru import logger

from src.exceptions import BernoulliSelfCheckError
from .arithmetic import require_odd_prime


def _inverses(p: int) -> List[int]:
    inv = [0, 1]
    for i in range(2, p):
        inv.append(-(p // i) * inv[p % i] % p)
    return inv


def _next_binomial_row(row: List[int], p: int) -> List[int]:
    return [1] + [(row[j - 1] + row[j]) % p for j in range(1, len(row))] + [1]


def bernoulli_recurrence(p: int) -> Dict[int, int]:
    """B_k mod p from sum_{j=0}^{n} C(n+1, j) B_j = 0.

    Runs up to n = p - 2 and checks that every odd B_n with n >= 3 vanishes.

    Raises:
        BernoulliSelfCheckError: If an odd residue is nonzero.
    """
    require_odd_prime(p)
    if p == 3:
        return {}

    inv = _inverses(p)
    b = [1]
    row = [1, 1]
    for n in range(1, p - 1):
        row = _next_binomial_row(row, p)
        s = sum(row[j] * b[j] for j in range(n)) % p
        b.append(-s * inv[n + 1] % p)

    for n in range(3, p - 1, 2):
        if b[n]:
            raise BernoulliSelfCheckError(f"B_{n} = {b[n]} mod {p}, expected 0")

    table = {k: b[k] for k in range(2, p - 2, 2)}
    logger.debug(f"recurrence: p={p}, {len(table)} residues")
    return table


def bernoulli_worpitzky(p: int) -> Dict[int, int]:
    """B_n = sum_{m=0}^{n} 1/(m+1) sum_{j=0}^{m} (-1)^j C(m, j) j^n mod p.

    The double sum is evaluated with the summation order exchanged:
    B_n = sum_j (-1)^j j^n W_n(j) with W_n(j) = sum_{m=j}^{n} C(m, j)/(m+1),
    and W_n, j^n and C(n, .) are updated in place as n grows.
    """
    require_odd_prime(p)
    if p == 3:
        return {}

    inv = _inverses(p)
    top = p - 3
    weights = [0] * (top + 1)
    powers = [1] * (top + 1)
    row = [1]
    table: Dict[int, int] = {}
    for n in range(0, top + 1):
        if n:
            row = _next_binomial_row(row, p)
            for j in range(top + 1):
                powers[j] = powers[j] * j % p
        inv_n1 = inv[n + 1]
        for j in range(n + 1):
            weights[j] = (weights[j] + row[j] * inv_n1) % p
        if n >= 2 and n % 2 == 0:
            total = 0
            for j in range(n + 1):
                term = powers[j] * weights[j]
                total += -term if j & 1 else term
            table[n] = total % p

    logger.debug(f"worpitzky: p={p}, {len(table)} residues")
    return table


ALGORITHMS = {
    "recurrence": bernoulli_recurrence,
    "worpitzky": bernoulli_worpitzky,
}
