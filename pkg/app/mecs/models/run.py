"""
CLI run configuration and benchmark records.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .types import Engine, Verdict


class RunConfig(BaseModel):
    """Settings for one CLI invocation; flags override environment defaults."""
    engine: Engine = Engine.ORACLE
    edge_cap: int = Field(default=24, gt=0)
    vc_cap: int = Field(default=4, gt=0)
    rainbow_k_cap: int = Field(default=12, gt=0)
    l_cap: int = Field(default=16, gt=0)
    seed: int = 0
    rounds_factor: float = Field(default=1.0, gt=0)
    budget_ms: int = Field(default=0, ge=0)
    output: Optional[str] = None
    dump_lp: Optional[str] = None
    repeat: int = Field(default=1, ge=1, description="Seeds tried by divide-and-color")


class BenchRecord(BaseModel):
    """One benchmark run, one CSV row."""
    instance_id: str
    engine: str
    verdict: Verdict
    optimum: Optional[int] = None
    l: int
    p: int
    wall_ms: Optional[float] = None
    witness_size: int = 0
    seed: int = 0
    kernel_vertices: Optional[int] = None
    modulator_size: Optional[int] = None

    @field_validator("witness_size")
    @classmethod
    def non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("witness_size must be non-negative")
        return value

    @model_validator(mode="after")
    def check_yes_witness(self) -> "BenchRecord":
        if self.verdict == Verdict.YES and self.witness_size < self.l:
            raise ValueError(f"YES record with witness size {self.witness_size} < l={self.l}")
        return self


class CrossValidationReport(BaseModel):
    """
    Outcome of running every engine on a corpus.

    Exact engines must agree with the oracle; a divide-and-color NO on a YES
    instance is a one-sided miss, a YES on a NO instance is a disagreement.
    """
    records: List[BenchRecord] = Field(default_factory=list)
    disagreements: List[str] = Field(default_factory=list)
    one_sided_misses: int = 0
    kernel_mismatches: int = 0

    @property
    def passed(self) -> bool:
        return not self.disagreements
