"""
Kernelization for MECS parameterized by a deg-1-modulator.

- **find_expansion**: constructive expansion lemma by repeated max-flow.
- **rule1_drop_isolated_components / rule2_expansion_delete**: the two reduction rules.
- **KernelService**: precheck, modulator and exhaustive rule application.
"""

from .expansion import find_expansion
from .kernel_service import (
    KernelService,
    residual_components,
    rule1_drop_isolated_components,
    rule2_expansion_delete,
    trivial_no_instance,
    vacuous_instance,
)

__all__ = [
    "find_expansion",
    "KernelService",
    "residual_components",
    "rule1_drop_isolated_components",
    "rule2_expansion_delete",
    "trivial_no_instance",
    "vacuous_instance",
]
