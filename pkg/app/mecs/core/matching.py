"""
Maximum matching on general graphs.
"""

from typing import Iterable, Optional

import networkx as nx

from ..models.graph import Graph, Matching


def max_matching(g: Graph, edges: Optional[Iterable[int]] = None) -> Matching:
    """
    Maximum-cardinality matching of `g`, or of the subgraph formed by
    `edges` when given.

    Uses the blossom-based `networkx.max_weight_matching` with unit weights
    and `maxcardinality=True`, which is exact on general graphs.
    """
    nxg = g.to_networkx(edges)
    pairs = nx.max_weight_matching(nxg, maxcardinality=True)
    return Matching(edge_indices=frozenset(nxg[u][v]["index"] for u, v in pairs))


def matching_number(g: Graph) -> int:
    return max_matching(g).size
