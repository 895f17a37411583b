"""
Kernelization trace models.
"""

from collections import Counter
from typing import List, Tuple

from pydantic import BaseModel, Field, model_validator

from .graph import MecsInstance
from .types import RuleId


class KernelStep(BaseModel):
    """One application of a reduction rule. Vertex ids refer to the input graph."""
    rule: RuleId
    deleted: List[int] = Field(default_factory=list, description="Deleted vertices (original ids)")
    l_decrease: int = Field(..., ge=0)
    modulator_removed: List[int] = Field(default_factory=list, description="Modulator vertices deleted")


class ExpansionResult(BaseModel):
    """
    A t-expansion from `x_prime` into `c_prime` in the modulator/component
    bipartite graph. Components are referenced by their index in the
    component list the expansion was computed on.
    """
    t: int = Field(..., ge=1)
    x_prime: List[int]
    c_prime: List[int]
    expansion_edges: List[Tuple[int, int]] = Field(default_factory=list, description="(x, component) pairs")

    @model_validator(mode="after")
    def check_expansion(self) -> "ExpansionResult":
        per_x = Counter(x for x, _ in self.expansion_edges)
        for x in self.x_prime:
            if per_x.get(x, 0) != self.t:
                raise ValueError(f"Vertex {x} has {per_x.get(x, 0)} expansion edges, expected {self.t}")
        targets = [c for _, c in self.expansion_edges]
        if len(set(targets)) != len(targets):
            raise ValueError("Expansion edges must end in distinct components")
        if set(targets) - set(self.c_prime):
            raise ValueError("Expansion edges must end inside c_prime")
        if len(targets) != self.t * len(self.x_prime):
            raise ValueError("Expansion must saturate exactly t·|x_prime| components")
        return self


class KernelTrace(BaseModel):
    """
    Full record of one kernelization run.

    `size_units` is |X_final| + number of components of G_final - X_final,
    the quantity bounded by (p + 1)·|modulator|.
    """
    original: MecsInstance
    final: MecsInstance
    modulator: List[int] = Field(default_factory=list, description="deg-1-modulator used (original ids)")
    steps: List[KernelStep] = Field(default_factory=list)
    vertex_map: List[int] = Field(default_factory=list, description="Kernel vertex -> original vertex")
    early_yes: bool = False
    vacuous: bool = False
    decided_no: bool = Field(default=False, description="p = 1 and l > mm: kernel is the trivial NO instance")
    size_units: int = 0
    matching_size: int = 0
    vc_upper: int = Field(default=0, description="2·mm, a vertex cover upper bound")

    @property
    def total_decrease(self) -> int:
        return sum(step.l_decrease for step in self.steps)
