"""
This module provides the `RainbowService` class: MECS through p copies of
the graph and an exact rainbow matching search.
"""

import logging
from typing import Dict, List, Optional, Set

from app import config
from app.mecs.budget import Deadline
from app.mecs.models import (
    EdgeColoring,
    Engine,
    Graph,
    LabeledGraph,
    Matching,
    MecsInstance,
    MecsSolution,
    RainbowInstance,
    Verdict,
)
from app.mecs.validation import CapValidator, ColoringValidator, ReconstructionError

logger = logging.getLogger(__name__)


def reduce_to_rainbow(inst: MecsInstance) -> RainbowInstance:
    """
    Builds p disjoint copies of G. Copy i of vertex u is i·n + u, copy i of
    edge e has index i·m + e, and every copy of e carries label e + 1.
    The target is k = l.
    """
    g = inst.graph
    edges = []
    labels = []
    for i in range(inst.p):
        offset = i * g.n
        for e, (u, v) in enumerate(g.edges):
            edges.append((offset + u, offset + v))
            labels.append(e + 1)
    lg = LabeledGraph(graph=Graph(n=inst.p * g.n, edges=edges), labels=tuple(labels))
    return RainbowInstance(lg=lg, k=inst.l)


class RainbowService:
    """
    Exact rainbow matching by include/exclude branch-and-bound, and the
    MECS solver built on it.
    """

    def __init__(self, k_cap: Optional[int] = None, budget_ms: Optional[int] = None):
        """
        Initializes the `RainbowService`.

        Args:
            k_cap: Largest target accepted; defaults to `config.RAINBOW_K_CAP`.
            budget_ms: Wall-time budget; defaults to `config.BUDGET_MS`.
        """
        self.k_cap = config.RAINBOW_K_CAP if k_cap is None else k_cap
        self.budget_ms = budget_ms
        self.nodes = 0

    def rainbow_matching_exact(self, ri: RainbowInstance) -> Optional[Matching]:
        """
        Finds a matching of size k with pairwise distinct labels.

        Edges are decided in index order. A branch is cut when the chosen
        edges plus min(distinct labels still available, free vertices / 2)
        cannot reach k.

        Returns:
            A rainbow matching of size exactly k, or None if none exists.

        Raises:
            InstanceTooLargeError: If k exceeds the cap.
            BudgetExceededError: If the wall-time budget runs out.
        """
        CapValidator.require_at_most(ri.k, self.k_cap, "Rainbow target k")
        g = ri.lg.graph
        labels = ri.lg.labels
        deadline = Deadline(self.budget_ms)
        self.nodes = 0
        if ri.k == 0:
            return Matching()

        chosen: List[int] = []
        used_vertices: Set[int] = set()
        used_labels: Set[int] = set()

        def usable(e: int) -> bool:
            u, v = g.edges[e]
            return u not in used_vertices and v not in used_vertices and labels[e] not in used_labels

        def bound(start: int) -> int:
            free_labels = set()
            free_vertices = set()
            for e in range(start, g.m):
                if usable(e):
                    free_labels.add(labels[e])
                    free_vertices.update(g.edges[e])
            return min(len(free_labels), len(free_vertices) // 2)

        def search(start: int) -> bool:
            self.nodes += 1
            deadline.check("rainbow matching")
            if len(chosen) >= ri.k:
                return True
            if len(chosen) + bound(start) < ri.k:
                return False
            for e in range(start, g.m):
                if not usable(e):
                    continue
                u, v = g.edges[e]
                chosen.append(e)
                used_vertices.update((u, v))
                used_labels.add(labels[e])
                if search(e + 1):
                    return True
                chosen.pop()
                used_vertices.difference_update((u, v))
                used_labels.discard(labels[e])
                if len(chosen) + bound(e + 1) < ri.k:
                    return False
            return False

        if not search(0):
            logger.debug("rainbow: no rainbow matching of size %d (%d nodes)", ri.k, self.nodes)
            return None
        return Matching.of(g, chosen)

    def solve_via_rainbow(self, inst: MecsInstance) -> MecsSolution:
        """
        Solves MECS through the rainbow reduction.

        An edge of copy i in the rainbow matching puts the original edge into
        matching M_{i+1}, which is colored i + 1.

        Raises:
            InstanceTooLargeError: If l exceeds the cap.
            ReconstructionError: If the translated witness fails verification.
        """
        ri = reduce_to_rainbow(inst)
        found = self.rainbow_matching_exact(ri)
        if found is None:
            logger.info("rainbow: NO for %r", inst)
            return MecsSolution(verdict=Verdict.NO, engine=Engine.RAINBOW.value, details={"nodes": self.nodes})

        m = inst.graph.m
        assignment: Dict[int, int] = {}
        matchings: List[List[int]] = [[] for _ in range(inst.p)]
        for j in found.sorted_edges():
            copy, e = divmod(j, m)
            assignment[e] = copy + 1
            matchings[copy].append(e)
        witness = EdgeColoring(assignment=assignment, p=inst.p)
        ok, error = ColoringValidator.verify_witness(witness, inst.graph, inst.l, inst.p)
        if not ok:
            raise ReconstructionError(f"rainbow back-translation failed: {error}")
        logger.info("rainbow: YES for %r", inst)
        return MecsSolution(
            verdict=Verdict.YES,
            witness=witness,
            engine=Engine.RAINBOW.value,
            details={"nodes": self.nodes, "matchings": matchings},
        )
