"""Colored five-vertex lattice models for Lascoux polynomials and atoms."""

from .algebra import MPoly, NotDivisibleError
from .symgroup import Permutation
from .operators import (atom_of_composition, demazure_lascoux, grothendieck_det, lascoux,
                        lascoux_atom)
from .tableaux import MarkedGTPattern, SetValuedTableau

__version__ = "0.1.0"

__all__ = [
    "MPoly", "NotDivisibleError", "Permutation", "lascoux", "lascoux_atom",
    "atom_of_composition", "demazure_lascoux", "grothendieck_det",
    "MarkedGTPattern", "SetValuedTableau",
]
