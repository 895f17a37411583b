"""
Models for the Red-Blue Dominating Set reduction.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from .graph import Graph, MecsInstance


class RbdsInstance(BaseModel):
    """
    Red-Blue Dominating Set: choose at most k red vertices dominating every
    blue vertex. Edges are (red, blue) pairs.
    """
    n_red: int = Field(..., ge=0)
    n_blue: int = Field(..., ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    k: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_bipartite(self) -> "RbdsInstance":
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("Duplicate red-blue edge")
        for r, b in self.edges:
            if not (0 <= r < self.n_red and 0 <= b < self.n_blue):
                raise ValueError(f"Edge ({r}, {b}) out of range")
        red_deg = {r for r, _ in self.edges}
        blue_deg = {b for _, b in self.edges}
        if len(red_deg) != self.n_red or len(blue_deg) != self.n_blue:
            raise ValueError("RBDS instances must not contain isolated vertices")
        return self

    def red_neighbors(self, r: int) -> List[int]:
        return [b for rr, b in self.edges if rr == r]

    def blue_neighbors(self, b: int) -> List[int]:
        return [r for r, bb in self.edges if bb == b]


class RedGadgetMap(BaseModel):
    """Where the red gadget of one red vertex lives inside G'."""
    vertex: int = Field(..., description="Vertex id of r in G'")
    modules: List[List[int]] = Field(default_factory=list, description="Vertex ids per module")
    root_pair: Tuple[int, int] = Field(..., description="Edge ids joining the gadget to r")
    output_pairs: List[Tuple[int, int]] = Field(default_factory=list)


class BlueGadgetMap(BaseModel):
    """Where the blue gadget of one blue vertex lives inside G'."""
    vertex: int = Field(..., description="Vertex id of b in G'")
    modules: List[List[int]] = Field(default_factory=list)
    cycle: List[int] = Field(default_factory=list, description="Cycle vertex ids y_0..y_2d")
    pendant_edge: int = Field(..., description="Edge id of y_0 - b")
    input_pairs: List[Tuple[int, int]] = Field(default_factory=list)


class PairIdentification(BaseModel):
    """An original edge r-b realized as one shared pair of G' edges."""
    red: int
    blue: int
    edges: Tuple[int, int]


class GadgetLayout(BaseModel):
    """Result of the RBDS -> MECS reduction."""
    mecs: MecsInstance
    source: RbdsInstance
    red: Dict[int, RedGadgetMap] = Field(default_factory=dict)
    blue: Dict[int, BlueGadgetMap] = Field(default_factory=dict)
    identifications: List[PairIdentification] = Field(default_factory=list)
    gadget_vertices: List[int] = Field(default_factory=list, description="Module and cycle vertices")

    @property
    def edge_bound_holds(self) -> bool:
        return self.mecs.graph.m <= 67 * len(self.source.edges)


class ClaimReport(BaseModel):
    """Verification outcome of one gadget claim."""
    claim: str
    passed: bool
    examined: int = Field(default=0, description="Colorings or partial colorings examined")
    detail: str = ""


class GadgetFragment(BaseModel):
    """
    A stand-alone module or gadget, closed off for exhaustive checks: every
    hanging edge ends at a private degree-1 vertex.

    `pairs` holds the output pairs of a red gadget or the input pairs of a
    blue gadget, as edge indices. `ports` names single hanging edges.
    """
    graph: Graph
    modules: List[List[int]] = Field(default_factory=list)
    pairs: List[Tuple[int, int]] = Field(default_factory=list)
    root_pair: Optional[Tuple[int, int]] = Field(default=None, description="Red gadget edges at r")
    ports: Dict[str, int] = Field(default_factory=dict)
