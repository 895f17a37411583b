"""
FPT algorithms for MECS parameterized by l.

- **pad_to_multiple**: make l divisible by p with isolated edges.
- **DivideColorService**: randomized divide-and-color with one-sided error.
- **RainbowService / reduce_to_rainbow**: p copies of G and an exact rainbow matching.
"""

from .divide_color_service import DivideColorService
from .padding import pad_to_multiple
from .rainbow_service import RainbowService, reduce_to_rainbow

__all__ = [
    "DivideColorService",
    "pad_to_multiple",
    "RainbowService",
    "reduce_to_rainbow",
]
