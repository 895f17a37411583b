"""
Enums shared by the solvers, the kernelizer and the CLI.
"""

from enum import Enum


class Verdict(str, Enum):
    """Answer of a decision engine."""
    YES = "YES"
    NO = "NO"
    BUDGET = "BUDGET"


class Engine(str, Enum):
    """Solver engines selectable from the CLI."""
    ORACLE = "oracle"
    DIVIDE_COLOR = "divide-color"
    RAINBOW = "rainbow"
    ILP = "ilp"


class RuleId(str, Enum):
    """Kernelization reduction rules."""
    RR1 = "RR1"
    RR2 = "RR2"


class PrecheckOutcome(str, Enum):
    """Result kind of the parameter precheck."""
    YES_WITNESS = "YES_WITNESS"
    BOUNDS = "BOUNDS"
