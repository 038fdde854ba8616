"""
GSp4 membership: J, the similitude character nu and its derivative omega.
"""

from math import gcd
from typing import Optional

from .models import RingMatrix


def j_matrix(p: int, m: int = 1) -> RingMatrix:
    """J = [[0, Id2], [-Id2, 0]] over Z/p^m."""
    return RingMatrix.j(p, m)


def similitude(M: RingMatrix) -> Optional[int]:
    """nu(M) = lambda when M^T J M = lambda J for a unit lambda, else None."""
    j = j_matrix(M.p, M.m)
    form = M.transpose() @ j @ M
    lam = form[0, 2]
    if gcd(lam, M.p) != 1 or form != j.scale(lam):
        return None
    return lam


def omega(X: RingMatrix) -> Optional[int]:
    """w with X^T J + J X = w J, else None.

    Linearising A^T J A = lambda J gives the J-form; for sp4 (w = 0) it
    agrees with the Id-form.
    """
    j = j_matrix(X.p, X.m)
    form = X.transpose() @ j + j @ X
    w = form[0, 2]
    if form != j.scale(w):
        return None
    return w
