"""
Foundation package of the MECS toolkit.

The Maximum Edge Colorable Subgraph problem asks, for a graph G and integers
l and p, for at least l edges of G together with a proper edge coloring that
uses at most p colors. This package provides:

- **Models**: `Graph`, `Matching`, `EdgeColoring`, `MecsInstance` and the
  result and trace models shared by the solver packages.
- **Core routines**: maximum matching, exact minimum vertex cover, Vizing
  coloring, balanced recoloring, exact colorability search, the
  deg-1-modulator approximation and the parameter precheck.
- **Validation**: the error hierarchy and coloring checks.
- **Formats**: plain-text readers and writers used by the CLI.
"""

__version__ = "1.0.0"
__description__ = "Maximum Edge Colorable Subgraph: kernels, FPT solvers, ILP and gadgets"

from .models import EdgeColoring, Graph, Matching, MecsInstance, MecsSolution, Verdict
from .validation import ColoringValidator, MecsError, verify_coloring

__all__ = [
    "__version__",
    "__description__",
    "EdgeColoring",
    "Graph",
    "Matching",
    "MecsInstance",
    "MecsSolution",
    "Verdict",
    "ColoringValidator",
    "MecsError",
    "verify_coloring",
]
