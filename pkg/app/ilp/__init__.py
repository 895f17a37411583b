"""
Exact MECS parameterized by the vertex cover number.

- **enumerate_types / CoverStructure**: matching types and twin classes.
- **build_ilp**: the program of one partial guess.
- **solve_ilp**: branch-and-bound over the LP relaxation.
- **reconstruct**: witness from an optimal assignment.
- **IlpService**: guess enumeration and the decision procedure.
"""

from .bnb_solver import solve_ilp
from .ilp_service import IlpService, enumerate_guesses
from .model_builder import build_ilp
from .reconstruction import reconstruct
from .type_enumeration import CoverStructure, aux_functions, enumerate_types

__all__ = [
    "solve_ilp",
    "IlpService",
    "enumerate_guesses",
    "build_ilp",
    "reconstruct",
    "CoverStructure",
    "aux_functions",
    "enumerate_types",
]
