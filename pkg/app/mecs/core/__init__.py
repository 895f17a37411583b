"""
Classical graph subroutines used by every solver.
"""

from .colorability import EdgeColoringSearch, find_coloring, is_colorable, iter_colorings
from .edge_coloring import lower_bound_by_classes, rebalance, vizing_color
from .matching import matching_number, max_matching
from .precheck import parameter_precheck
from .vertex_cover import (
    deg1_modulator_3approx,
    is_deg1_modulator,
    min_vertex_cover,
    residual_max_degree,
)

__all__ = [
    "EdgeColoringSearch",
    "find_coloring",
    "is_colorable",
    "iter_colorings",
    "lower_bound_by_classes",
    "rebalance",
    "vizing_color",
    "matching_number",
    "max_matching",
    "parameter_precheck",
    "deg1_modulator_3approx",
    "is_deg1_modulator",
    "min_vertex_cover",
    "residual_max_degree",
]
