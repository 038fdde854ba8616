"""
GSp4 and sp4 matrix model: brackets, the Galois action, filtration lifts and checks
"""

from .algebra import adjoint_action, bracket, commutator, decompose, torus_character
from .lifting import (
    adjustment_matrix,
    filtration_commutator,
    filtration_commutator_check,
    filtration_lift,
    leading_term,
    random_gsp4,
    similitude_adjust,
)
from .matrices import j_matrix, omega, similitude
from .models import AdBasis, AdElement, BracketTableReport, LieCheckReport, RingMatrix, RootConstant
from .verification import (
    eigenvalue_table_check,
    grading_check,
    jacobi_check,
    run_lie_suite,
    verify_bracket_table,
)

__all__ = [
    "AdBasis",
    "AdElement",
    "BracketTableReport",
    "LieCheckReport",
    "RingMatrix",
    "RootConstant",
    "adjoint_action",
    "adjustment_matrix",
    "bracket",
    "commutator",
    "decompose",
    "eigenvalue_table_check",
    "filtration_commutator",
    "filtration_commutator_check",
    "filtration_lift",
    "grading_check",
    "j_matrix",
    "jacobi_check",
    "leading_term",
    "omega",
    "random_gsp4",
    "run_lie_suite",
    "similitude",
    "similitude_adjust",
    "torus_character",
    "verify_bracket_table",
]
