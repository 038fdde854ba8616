"""
Ad0 = sp4 over F_p: coordinates, bracket and the Galois action through
the diagonal representation diag(chi^a, chi^b, chi^-a, chi^-b).
"""

from typing import Optional

from src.exceptions import NotInAlgebra, NotInvertible
from src.services.modarith import mod_pow
from .models import AdBasis, AdElement, RingMatrix, assemble, is_sp4


def decompose(X: RingMatrix) -> Optional[AdElement]:
    """Coordinates of X in AdBasis, or None when X is not in sp4."""
    if X.m != 1:
        raise ValueError("decompose expects a matrix over F_p")
    if not is_sp4(X):
        return None
    coords = tuple(X[i, j] for i, j in AdBasis.coordinate_positions())
    if assemble(X.p, coords) != X:
        return None
    return AdElement(matrix=X, coords=coords)


def commutator(X: RingMatrix, Y: RingMatrix) -> RingMatrix:
    return X @ Y - Y @ X


def bracket(X: AdElement, Y: AdElement) -> AdElement:
    """[X, Y] = XY - YX re-expressed in coordinates.

    Raises:
        NotInAlgebra: If the commutator leaves sp4.
    """
    if X.p != Y.p:
        raise ValueError(f"prime mismatch: {X.p} vs {Y.p}")
    result = decompose(commutator(X.matrix, Y.matrix))
    if result is None:
        raise NotInAlgebra(f"[X, Y] is not in sp4 over F_{X.p}")
    return result


def torus_character(chi_val: int, alpha: int, beta: int, p: int) -> RingMatrix:
    """diag(c^a, c^b, c^-a, c^-b) with exponents reduced mod p - 1."""
    c = chi_val % p
    if c == 0:
        raise NotInvertible(f"{chi_val} is not a unit mod {p}")
    n = p - 1
    exponents = (alpha % n, beta % n, -alpha % n, -beta % n)
    return RingMatrix.diag([mod_pow(c, e, p) for e in exponents], p)


def adjoint_action(chi_val: int, alpha: int, beta: int, X: AdElement) -> AdElement:
    """Conjugation of X by the image of sigma with chi(sigma) = chi_val."""
    p = X.p
    d = torus_character(chi_val, alpha, beta, p)
    d_inv = torus_character(chi_val, -alpha, -beta, p)
    result = decompose(d @ X.matrix @ d_inv)
    if result is None:
        raise NotInAlgebra("conjugate left sp4")
    return result
