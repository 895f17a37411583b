"""
Solver results.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from .graph import EdgeColoring
from .types import PrecheckOutcome, Verdict


class MecsSolution(BaseModel):
    """
    Answer to a MECS instance.

    A YES verdict always carries a witness coloring. `optimum` is the maximum
    number of p-edge-colorable edges when the engine computes it (the oracle
    always does).
    """
    verdict: Verdict = Field(..., description="YES, NO or BUDGET")
    witness: Optional[EdgeColoring] = Field(default=None, description="Witness coloring for YES")
    optimum: Optional[int] = Field(default=None, description="Maximum p-edge-colorable edge count")
    engine: Optional[str] = Field(default=None, description="Engine that produced the answer")
    confidence: Optional[float] = Field(default=None, description="Success probability lower bound")
    details: Dict[str, Any] = Field(default_factory=dict, description="Engine-specific counters")

    @model_validator(mode="after")
    def check_witness(self) -> "MecsSolution":
        if self.verdict == Verdict.YES and self.witness is None:
            raise ValueError("A YES solution requires a witness")
        return self

    @property
    def is_yes(self) -> bool:
        return self.verdict == Verdict.YES


class PrecheckResult(BaseModel):
    """
    Outcome of the parameter precheck.

    For BOUNDS, `vc_upper` is 2·mm(G) (the endpoints of M1 cover G) and
    `modulator` is V(M2), a deg-1-modulator of G.
    """
    outcome: PrecheckOutcome
    witness: Optional[EdgeColoring] = None
    matching_size: int = Field(..., ge=0, description="|M1| = mm(G)")
    second_matching_size: int = Field(default=0, ge=0, description="|M2| in G - M1")
    vc_upper: int = Field(default=0, ge=0)
    modulator: List[int] = Field(default_factory=list)
    vc_bound_holds: bool = False
    modulator_bound_holds: bool = False

    @property
    def modulator_upper(self) -> int:
        return len(self.modulator)
