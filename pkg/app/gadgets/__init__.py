"""
The RBDS to MECS hardness reduction as an instance generator.

- **build_module / GraphBuilder**: the inverting module and graph assembly.
- **build_red_gadget / build_blue_gadget**: stand-alone gadgets.
- **ReductionService**: RBDS instance to (G', |E(G')| - k, 3), and the
  split graph G''.
- **ClaimVerifier**: exhaustive checks of the gadget coloring properties.
- **RbdsSolver**: brute-force RBDS for end-to-end comparisons.
"""

from .claims import ClaimVerifier, module_state_ok
from .gadget_builder import add_blue_gadget, add_red_gadget, build_blue_gadget, build_red_gadget
from .module import GraphBuilder, build_module, port
from .rbds_solver import RbdsSolver
from .reduction_service import ReductionService

__all__ = [
    "ClaimVerifier",
    "module_state_ok",
    "add_blue_gadget",
    "add_red_gadget",
    "build_blue_gadget",
    "build_red_gadget",
    "GraphBuilder",
    "build_module",
    "port",
    "RbdsSolver",
    "ReductionService",
]
