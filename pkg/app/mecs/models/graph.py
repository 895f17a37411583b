"""
Graph, matching and edge-coloring models.

Vertices are dense 0-indexed integers and an edge is identified by its
insertion index, so every derived object (matchings, colorings, witnesses)
refers to edges by index.
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationInfo, field_validator, model_validator


class Graph(BaseModel):
    """
    A simple undirected graph.

    Edges are stored as `(min, max)` pairs in insertion order. Adjacency and
    incidence lists are derived once after validation; neighbor lists are
    sorted ascending.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Number of vertices")
    edges: Tuple[Tuple[int, int], ...] = Field(default=(), description="Edges in insertion order")

    _adjacency: List[List[int]] = PrivateAttr(default_factory=list)
    _incidence: List[List[int]] = PrivateAttr(default_factory=list)
    _index: Dict[Tuple[int, int], int] = PrivateAttr(default_factory=dict)

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, value: Iterable[Sequence[int]]) -> Tuple[Tuple[int, int], ...]:
        normalized = []
        for pair in value:
            u, v = int(pair[0]), int(pair[1])
            normalized.append((u, v) if u <= v else (v, u))
        return tuple(normalized)

    @field_validator("edges")
    @classmethod
    def check_simple(cls, value: Tuple[Tuple[int, int], ...], info: ValidationInfo) -> Tuple[Tuple[int, int], ...]:
        # runs before model_post_init builds the adjacency lists
        n = info.data.get("n")
        if n is None:
            return value
        seen = set()
        for i, (u, v) in enumerate(value):
            if u == v:
                raise ValueError(f"Edge {i} is a self-loop at vertex {u}")
            if u < 0 or v >= n:
                raise ValueError(f"Edge {i} ({u}, {v}) is out of range for n={n}")
            if (u, v) in seen:
                raise ValueError(f"Edge {i} ({u}, {v}) is a duplicate")
            seen.add((u, v))
        return value

    def model_post_init(self, __context) -> None:
        adjacency: List[List[int]] = [[] for _ in range(self.n)]
        incidence: List[List[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adjacency[u].append(v)
            adjacency[v].append(u)
            incidence[u].append(i)
            incidence[v].append(i)
            self._index[(u, v)] = i
        for nbrs in adjacency:
            nbrs.sort()
        self._adjacency = adjacency
        self._incidence = incidence

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> List[List[int]]:
        return self._adjacency

    def neighbors(self, v: int) -> List[int]:
        return self._adjacency[v]

    def incident(self, v: int) -> List[int]:
        """Edge indices incident on `v`, in insertion order."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adjacency), default=0)

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u <= v else (v, u))

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    def delete_vertices(self, removed: Iterable[int]) -> Tuple["Graph", List[int]]:
        """
        Returns the graph without `removed`, with vertices renumbered in
        ascending order, together with the new-id -> old-id mapping.
        """
        gone = set(removed)
        kept = [v for v in range(self.n) if v not in gone]
        new_id = {old: new for new, old in enumerate(kept)}
        edges = [
            (new_id[u], new_id[v])
            for u, v in self.edges
            if u not in gone and v not in gone
        ]
        return Graph(n=len(kept), edges=edges), kept

    def edge_subgraph(self, indices: Iterable[int]) -> "Graph":
        """Same vertex set, only the chosen edges (kept in index order)."""
        chosen = sorted(set(indices))
        return Graph(n=self.n, edges=[self.edges[i] for i in chosen])

    def to_networkx(self, indices: Optional[Iterable[int]] = None) -> nx.Graph:
        """A networkx view; every edge carries its index as attribute `index`."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        chosen = range(self.m) if indices is None else sorted(indices)
        for i in chosen:
            u, v = self.edges[i]
            g.add_edge(u, v, index=i)
        return g

    def __repr__(self) -> str:
        return f"<Graph(n={self.n}, m={self.m})>"


class Matching(BaseModel):
    """A set of pairwise vertex-disjoint edges of some graph."""

    model_config = ConfigDict(frozen=True)

    edge_indices: FrozenSet[int] = Field(default_factory=frozenset, description="Edge indices")

    @classmethod
    def of(cls, graph: Graph, indices: Iterable[int]) -> "Matching":
        indices = frozenset(indices)
        used = set()
        for i in sorted(indices):
            u, v = graph.edges[i]
            if u in used or v in used:
                raise ValueError(f"Edge {i} ({u}, {v}) shares an endpoint with another matching edge")
            used.update((u, v))
        return cls(edge_indices=indices)

    @property
    def size(self) -> int:
        return len(self.edge_indices)

    def sorted_edges(self) -> List[int]:
        return sorted(self.edge_indices)


class EdgeColoring(BaseModel):
    """
    A partial edge coloring: edge index -> color in 1..p.

    Properness depends on the graph and is checked by
    `ColoringValidator.verify_coloring`.
    """

    model_config = ConfigDict(frozen=True)

    assignment: Dict[int, int] = Field(default_factory=dict, description="Edge index to color")
    p: int = Field(..., ge=1, description="Color budget")

    @model_validator(mode="after")
    def check_palette(self) -> "EdgeColoring":
        for edge, color in self.assignment.items():
            if not 1 <= color <= self.p:
                raise ValueError(f"Edge {edge} has color {color} outside 1..{self.p}")
        return self

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]], p: int) -> "EdgeColoring":
        """Color class i (0-based) receives color i + 1."""
        assignment = {}
        for color, members in enumerate(classes, start=1):
            for edge in members:
                assignment[edge] = color
        return cls(assignment=assignment, p=p)

    @property
    def size(self) -> int:
        return len(self.assignment)

    def classes(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for edge in sorted(self.assignment):
            grouped.setdefault(self.assignment[edge], []).append(edge)
        return grouped

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def class_sizes(self) -> List[int]:
        """Sizes of all p classes, empty ones included."""
        sizes = [0] * self.p
        for color in self.assignment.values():
            sizes[color - 1] += 1
        return sizes


class MecsInstance(BaseModel):
    """A Maximum Edge Colorable Subgraph instance (graph, l, p)."""

    model_config = ConfigDict(frozen=True)

    graph: Graph = Field(..., description="Input graph")
    l: int = Field(..., ge=0, description="Target number of colored edges")
    p: int = Field(..., ge=1, description="Color budget")

    def __repr__(self) -> str:
        return f"<MecsInstance(n={self.graph.n}, m={self.graph.m}, l={self.l}, p={self.p})>"
