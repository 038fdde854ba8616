"""
Irregularity data: E, E*, E-bar and the counts e_p, e
"""

from .eigenspaces import (
    compute_E,
    compute_sets,
    convention_notes,
    irregular_indices,
    irregularity_index,
    theorem_bound_holds,
)
from .models import IrregularityData

__all__ = [
    "IrregularityData",
    "compute_E",
    "compute_sets",
    "convention_notes",
    "irregular_indices",
    "irregularity_index",
    "theorem_bound_holds",
]
