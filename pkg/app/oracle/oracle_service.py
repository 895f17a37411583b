"""
This module provides the `OracleService` class, the exhaustive MECS solver.
"""

import logging
from itertools import combinations
from typing import List, Optional, Tuple

from app import config
from app.mecs.budget import Deadline
from app.mecs.core import find_coloring, lower_bound_by_classes, max_matching, vizing_color
from app.mecs.models import EdgeColoring, Graph, MecsInstance, MecsSolution, Verdict
from app.mecs.validation import CapValidator

logger = logging.getLogger(__name__)


class OracleService:
    """
    Exact MECS by enumeration.

    A graph has a p-edge-colorable subgraph with l edges iff p edge-disjoint
    matchings cover l edges. The oracle searches for the largest such
    subgraph directly: edge subsets are tried in decreasing size, those with
    a vertex of degree above p are skipped, subsets with maximum degree at
    most p - 1 are colored by Vizing, and the rest go to the backtracking
    colorability check.
    """

    def __init__(self, edge_cap: Optional[int] = None, budget_ms: Optional[int] = None):
        """
        Initializes the `OracleService`.

        Args:
            edge_cap: Largest edge count accepted; defaults to
                `config.ORACLE_EDGE_CAP`.
            budget_ms: Wall-time budget; defaults to `config.BUDGET_MS`.
        """
        self.edge_cap = config.ORACLE_EDGE_CAP if edge_cap is None else edge_cap
        self.budget_ms = budget_ms

    @staticmethod
    def upper_bound(g: Graph, p: int) -> int:
        """min(m, p·mm(G), floor(sum_v min(deg v, p) / 2))."""
        by_degree = sum(min(g.degree(v), p) for v in range(g.n)) // 2
        return min(g.m, p * max_matching(g).size, by_degree)

    def max_colorable(self, g: Graph, p: int) -> Tuple[int, EdgeColoring]:
        """
        Largest p-edge-colorable subgraph of `g`.

        Returns:
            The optimum and a coloring realizing it.

        Raises:
            InstanceTooLargeError: If `g` has more edges than the cap.
            BudgetExceededError: If the wall-time budget runs out.
        """
        CapValidator.require_at_most(g.m, self.edge_cap, "Edge count")
        deadline = Deadline(self.budget_ms)

        if g.max_degree() <= p - 1:
            full = vizing_color(g)
            return g.m, EdgeColoring(assignment=full.assignment, p=p)

        best = lower_bound_by_classes(g, p)
        upper = self.upper_bound(g, p)
        logger.debug("oracle: bounds [%d, %d] for m=%d p=%d", best.size, upper, g.m, p)
        if best.size >= upper:
            return best.size, best

        degree = [g.degree(v) for v in range(g.n)]
        for size in range(upper, best.size, -1):
            for removed in combinations(range(g.m), g.m - size):
                deadline.check("oracle search")
                load = list(degree)
                for e in removed:
                    u, v = g.edges[e]
                    load[u] -= 1
                    load[v] -= 1
                top = max(load, default=0)
                if top > p:
                    continue
                gone = set(removed)
                keep = [e for e in range(g.m) if e not in gone]
                if top <= p - 1:
                    colored = vizing_color(g, keep)
                    return size, EdgeColoring(assignment=colored.assignment, p=p)
                found = find_coloring(g, p, keep)
                if found is not None:
                    return size, EdgeColoring(assignment=found, p=p)
        return best.size, best

    def solve_exact(self, inst: MecsInstance) -> MecsSolution:
        """
        Exact verdict, optimum and (for YES) witness for an instance.

        Args:
            inst: The instance to solve.

        Returns:
            A `MecsSolution` whose `optimum` is always set.
        """
        optimum, coloring = self.max_colorable(inst.graph, inst.p)
        if optimum >= inst.l:
            logger.info("oracle: YES (optimum %d >= l=%d)", optimum, inst.l)
            return MecsSolution(verdict=Verdict.YES, witness=coloring, optimum=optimum, engine="oracle")
        logger.info("oracle: NO (optimum %d < l=%d)", optimum, inst.l)
        return MecsSolution(verdict=Verdict.NO, optimum=optimum, engine="oracle")

    def optimum_table(self, g: Graph, p_max: int) -> List[int]:
        """Optimum for p = 1..p_max."""
        return [self.max_colorable(g, p)[0] for p in range(1, p_max + 1)]

    def chromatic_index_exact(self, g: Graph) -> int:
        """
        Exact chromatic index: Δ if a Δ-edge-coloring exists, else Δ + 1.

        Raises:
            InstanceTooLargeError: If `g` has more edges than the cap.
        """
        CapValidator.require_at_most(g.m, self.edge_cap, "Edge count")
        delta = g.max_degree()
        if g.m == 0:
            return 0
        if find_coloring(g, delta) is not None:
            return delta
        assert vizing_color(g).colors_used() <= delta + 1
        return delta + 1
