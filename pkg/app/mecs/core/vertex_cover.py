"""
Exact minimum vertex cover and the deg-1-modulator approximation.
"""

import logging
from typing import Iterable, List, Optional, Set

from ..models.graph import Graph
from .matching import matching_number

logger = logging.getLogger(__name__)


def _first_uncovered(g: Graph, chosen: Set[int]) -> Optional[int]:
    for i, (u, v) in enumerate(g.edges):
        if u not in chosen and v not in chosen:
            return i
    return None


def _cover_within(g: Graph, budget: int, chosen: Set[int]) -> Optional[Set[int]]:
    edge = _first_uncovered(g, chosen)
    if edge is None:
        return chosen
    if budget == 0:
        return None
    for w in g.edges[edge]:
        found = _cover_within(g, budget - 1, chosen | {w})
        if found is not None:
            return found
    return None


def min_vertex_cover(g: Graph) -> List[int]:
    """
    Minimum vertex cover by bounded-depth branching on an uncovered edge.

    The budget starts at mm(g), a lower bound on vc(g), and grows by one
    until a cover is found, so the first cover returned is minimum. Branches
    try the lower endpoint first.
    """
    budget = matching_number(g)
    while True:
        cover = _cover_within(g, budget, set())
        if cover is not None:
            return sorted(cover)
        budget += 1


def residual_max_degree(g: Graph, removed: Iterable[int]) -> int:
    """Δ(g - removed)."""
    gone = set(removed)
    best = 0
    for v in range(g.n):
        if v in gone:
            continue
        best = max(best, sum(1 for w in g.neighbors(v) if w not in gone))
    return best


def is_deg1_modulator(g: Graph, x: Iterable[int]) -> bool:
    return residual_max_degree(g, x) <= 1


def deg1_modulator_3approx(g: Graph) -> List[int]:
    """
    A deg-1-modulator X (Δ(g - X) <= 1) of size at most 3·opt.

    While some vertex u keeps two neighbors v1, v2 outside X, all three are
    added; any optimal modulator must hit {u, v1, v2}. A final pass drops
    members, latest first, that are not needed to keep Δ(g - X) <= 1.
    """
    chosen: List[int] = []
    in_x: Set[int] = set()
    for u in range(g.n):
        if u in in_x:
            continue
        free = [w for w in g.neighbors(u) if w not in in_x]
        if len(free) >= 2:
            for w in (u, free[0], free[1]):
                chosen.append(w)
                in_x.add(w)

    for w in reversed(list(chosen)):
        trial = in_x - {w}
        if is_deg1_modulator(g, trial):
            in_x = trial
    logger.debug("deg-1-modulator: %d picked, %d kept", len(chosen), len(in_x))
    return sorted(in_x)
