"""
Data models for the MECS toolkit.

- **Graph / Matching / EdgeColoring / MecsInstance**: the problem substrate.
- **MecsSolution / PrecheckResult**: solver answers.
- **KernelTrace / KernelStep / ExpansionResult**: kernelization records.
- **LabeledGraph / RainbowInstance**: rainbow matching reduction.
- **TypeTuple / PartialGuess / IlpModel**: the vertex-cover ILP.
- **RbdsInstance / GadgetLayout / ClaimReport**: the hardness reduction.
- **RunConfig / BenchRecord**: CLI plumbing.
"""

from .graph import EdgeColoring, Graph, Matching, MecsInstance
from .types import Engine, PrecheckOutcome, RuleId, Verdict
from .solution import MecsSolution, PrecheckResult
from .kernel import ExpansionResult, KernelStep, KernelTrace
from .rainbow import LabeledGraph, RainbowInstance
from .ilp import IlpConstraint, IlpModel, IlpVariable, PartialGuess, ReconstructionReport, TypeTuple
from .gadget import (
    BlueGadgetMap,
    ClaimReport,
    GadgetFragment,
    GadgetLayout,
    PairIdentification,
    RbdsInstance,
    RedGadgetMap,
)
from .run import BenchRecord, CrossValidationReport, RunConfig

__all__ = [
    "Graph",
    "Matching",
    "EdgeColoring",
    "MecsInstance",
    "Engine",
    "PrecheckOutcome",
    "RuleId",
    "Verdict",
    "MecsSolution",
    "PrecheckResult",
    "ExpansionResult",
    "KernelStep",
    "KernelTrace",
    "LabeledGraph",
    "RainbowInstance",
    "IlpConstraint",
    "IlpModel",
    "IlpVariable",
    "PartialGuess",
    "ReconstructionReport",
    "TypeTuple",
    "BlueGadgetMap",
    "ClaimReport",
    "GadgetFragment",
    "GadgetLayout",
    "PairIdentification",
    "RbdsInstance",
    "RedGadgetMap",
    "BenchRecord",
    "CrossValidationReport",
    "RunConfig",
]
