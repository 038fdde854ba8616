"""
Matrix identities behind the lifting argument: the filtration commutator
congruence and the similitude adjustment by A = diag(1+p^m, 1, 1, 1+p^m).
"""

import random
from math import gcd
from typing import Tuple

from src.exceptions import NotInvertible, SimilitudeMismatch
from src.services.modarith import mod_inv, mod_pow
from .algebra import bracket
from .matrices import similitude
from .models import AdBasis, AdElement, RingMatrix


def filtration_lift(x: AdElement, higher: RingMatrix, level: int, precision: int) -> RingMatrix:
    """1 + p^level x + p^(level+1) higher over Z/p^precision."""
    p = x.p
    one = RingMatrix.identity(p, precision)
    return (
        one
        + x.matrix.at_precision(precision).scale(p ** level)
        + higher.at_precision(precision).scale(p ** (level + 1))
    )


def filtration_commutator(
    c: AdElement, d: AdElement, S: RingMatrix, T: RingMatrix, l: int, m: int
) -> RingMatrix:
    """C D C^-1 D^-1 over Z/p^(l+m+1)."""
    if l < 1 or m < 1:
        raise ValueError("levels must be positive")
    precision = l + m + 1
    C = filtration_lift(c, S, l, precision)
    D = filtration_lift(d, T, m, precision)
    return C @ D @ C.inverse() @ D.inverse()


def leading_term(M: RingMatrix, level: int) -> RingMatrix:
    """(M - 1) / p^level mod p, for M = 1 mod p^level."""
    p = M.p
    q = p ** level
    diff = M - RingMatrix.identity(p, M.m)
    if any(x % q for row in diff.entries for x in row):
        raise ValueError(f"matrix is not 1 mod p^{level}")
    return RingMatrix.of([[x // q for x in row] for row in diff.entries], p)


def filtration_commutator_check(
    c: AdElement, d: AdElement, S: RingMatrix, T: RingMatrix, l: int, m: int
) -> bool:
    """C D C^-1 D^-1 == 1 + p^(l+m) [c, d] mod p^(l+m+1)."""
    commutator = filtration_commutator(c, d, S, T, l, m)
    try:
        return leading_term(commutator, l + m) == bracket(c, d).matrix
    except ValueError:
        # not even 1 mod p^(l+m)
        return False


def adjustment_matrix(p: int, m: int) -> RingMatrix:
    """A = diag(1 + p^m, 1, 1, 1 + p^m) over Z/p^(m+1)."""
    u = 1 + p ** m
    return RingMatrix.diag((u, 1, 1, u), p, m + 1)


def similitude_adjust(R: RingMatrix, psi: int) -> Tuple[int, RingMatrix]:
    """The unique s mod p with nu(A^s R) = psi mod p^(m+1), where R is over Z/p^(m+1).

    Raises:
        SimilitudeMismatch: If R is not in GSp4 or nu(R) != psi mod p^m.
        NotInvertible: If psi is not a unit.
    """
    p, k = R.p, R.m
    m = k - 1
    if m < 1:
        raise ValueError("R must be given modulo p^(m+1) with m >= 1")
    nu = similitude(R)
    if nu is None:
        raise SimilitudeMismatch("R is not in GSp4")
    full, low = p ** k, p ** m
    psi %= full
    if gcd(psi, p) != 1:
        raise NotInvertible(f"psi={psi} is not a unit mod {full}")
    if (nu - psi) % low:
        raise SimilitudeMismatch(f"nu(R)={nu} and psi={psi} differ mod {p}^{m}")

    ratio = psi * mod_inv(nu, full) % full
    s = (ratio - 1) // low % p
    u = mod_pow(1 + low, s, full)
    adjusted = RingMatrix.diag((u, 1, 1, u), p, k) @ R
    return s, adjusted


def random_unit(p: int, modulus: int, rng: random.Random) -> int:
    while True:
        x = rng.randrange(1, modulus)
        if x % p:
            return x


def random_matrix(p: int, m: int, rng: random.Random) -> RingMatrix:
    q = p ** m
    return RingMatrix.of([[rng.randrange(q) for _ in range(4)] for _ in range(4)], p, m)


def random_ad_element(p: int, rng: random.Random) -> AdElement:
    return AdElement.from_coords(p, [rng.randrange(p) for _ in range(10)])


def random_gsp4(p: int, m: int, rng: random.Random, factors: int = 6) -> RingMatrix:
    """Product of torus similitudes diag(u, v, l/u, l/v) and root unipotents 1 + t X.

    Root vectors square to zero, so 1 + t X lies in Sp4 exactly.
    """
    q = p ** m
    basis = AdBasis(p=p)
    one = RingMatrix.identity(p, m)
    result = one
    for _ in range(factors):
        if rng.random() < 0.4:
            u, v, lam = (random_unit(p, q, rng) for _ in range(3))
            factor = RingMatrix.diag(
                (u, v, lam * mod_inv(u, q), lam * mod_inv(v, q)), p, m
            )
        else:
            delta = rng.choice(AdBasis.ROOTS)
            factor = one + basis.root(delta, m).scale(rng.randrange(q))
        result = result @ factor
    return result
