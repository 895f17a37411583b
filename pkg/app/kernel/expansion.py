"""
Constructive expansion lemma via max-flow.
"""

import logging
from typing import Dict, List, Optional, Sequence

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from app.mecs.models import ExpansionResult

logger = logging.getLogger(__name__)

SOURCE = "s"
SINK = "t"


def _flow_network(left: List[int], right: List[int], neighbors: Dict[int, Sequence[int]], t: int) -> nx.DiGraph:
    net = nx.DiGraph()
    net.add_node(SOURCE)
    for x in left:
        net.add_edge(SOURCE, ("x", x), capacity=t)
    live = set(left)
    for c in right:
        for x in neighbors[c]:
            if x in live:
                # no capacity attribute: unbounded, so a minimum cut never crosses it
                net.add_edge(("x", x), ("c", c))
        net.add_edge(("c", c), SINK, capacity=1)
    net.add_node(SINK)
    return net


def find_expansion(
    left: Sequence[int],
    neighbors: Dict[int, Sequence[int]],
    t: int
) -> Optional[ExpansionResult]:
    """
    Finds a t-expansion in a bipartite graph between `left` vertices and the
    right vertices `neighbors.keys()` (each mapped to its left neighbors).

    If |right| >= t·|left|, returns nonempty X' ⊆ left and C' ⊆ right such
    that each x in X' has t private partners in C' (the expansion edges) and
    no member of C' has a neighbor outside X'. C' is the set of saturated
    right vertices. Otherwise, or if `left` is empty, returns None.

    While the flow with capacity t on every left vertex does not saturate
    the left side, the left part A of the minimum cut violates Hall's
    condition (|N(A)| < t|A|); A and N(A) are removed and the flow is
    recomputed. Removal keeps |right| > t·|left|, so the loop ends with a
    saturating flow on a nonempty left side.

    Args:
        left: Left vertex ids.
        neighbors: Right vertex id -> its left neighbors; none may be empty.
        t: Expansion factor.
    """
    current = sorted(left)
    right = sorted(neighbors)
    if not current or len(right) < t * len(current):
        return None

    rounds = 0
    while current:
        rounds += 1
        net = _flow_network(current, right, neighbors, t)
        value, flow = nx.maximum_flow(net, SOURCE, SINK, flow_func=edmonds_karp)
        if value == t * len(current):
            edges = []
            for x in current:
                for node, amount in sorted(flow[("x", x)].items()):
                    if amount >= 1:
                        edges.append((x, node[1]))
            saturated = sorted(c for _, c in edges)
            logger.debug("expansion: saturated after %d flow rounds, |X'|=%d", rounds, len(current))
            return ExpansionResult(t=t, x_prime=current, c_prime=saturated, expansion_edges=edges)

        _, (source_side, _) = nx.minimum_cut(net, SOURCE, SINK, flow_func=edmonds_karp)
        violator = {node[1] for node in source_side if isinstance(node, tuple) and node[0] == "x"}
        hall_nbrs = {c for c in right if any(x in violator for x in neighbors[c])}
        current = [x for x in current if x not in violator]
        right = [c for c in right if c not in hall_nbrs]
        logger.debug("expansion: removed Hall violator of size %d", len(violator))
    return None
