"""
Validation module for the MECS toolkit.

- **Errors**: `MecsError` and its subclasses for malformed input, exceeded
  caps and budgets, and internal reconstruction failures.
- **ColoringValidator**: properness and witness checks for edge colorings.
- **CapValidator**: up-front cap checks raising `InstanceTooLargeError`.
"""

from .validators import (
    BudgetExceededError,
    CapValidator,
    ClaimEnumerationError,
    ColoringValidator,
    GraphFormatError,
    InstanceTooLargeError,
    MecsError,
    ReconstructionError,
    verify_coloring,
)

__all__ = [
    "BudgetExceededError",
    "CapValidator",
    "ClaimEnumerationError",
    "ColoringValidator",
    "GraphFormatError",
    "InstanceTooLargeError",
    "MecsError",
    "ReconstructionError",
    "verify_coloring",
]
