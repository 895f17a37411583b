"""
Exact p-edge-colorability by backtracking.

The search colors the most constrained edge first (fewest remaining colors,
then most uncolored neighbors, then lowest index), checks that no uncolored
neighbor is left without a color, and introduces each never-used color only
once.
"""

from typing import Dict, Iterable, Iterator, List, Optional

from ..models.graph import Graph


class EdgeColoringSearch:
    """
    Backtracking over proper p-edge-colorings of a subgraph, optionally
    extending a fixed partial coloring.

    Args:
        g: The host graph.
        p: Number of colors.
        edges: Edge indices of the subgraph (all edges when omitted).
        fixed: Pre-assigned colors; must be proper among themselves.
        break_symmetry: Try only one never-used color per branch.
    """

    def __init__(
        self,
        g: Graph,
        p: int,
        edges: Optional[Iterable[int]] = None,
        fixed: Optional[Dict[int, int]] = None,
        break_symmetry: bool = True
    ):
        self.g = g
        self.p = p
        self.edges = sorted(range(g.m) if edges is None else set(edges))
        self.fixed = dict(fixed or {})
        self.break_symmetry = break_symmetry
        self.nodes = 0

        member = set(self.edges) | set(self.fixed)
        self.neighbors: Dict[int, List[int]] = {}
        for e in member:
            u, v = g.edges[e]
            self.neighbors[e] = sorted(
                f for f in set(g.incident(u)) | set(g.incident(v)) if f != e and f in member
            )

    def _feasible_start(self) -> bool:
        load: Dict[int, int] = {}
        for e in set(self.edges) | set(self.fixed):
            for v in self.g.edges[e]:
                load[v] = load.get(v, 0) + 1
                if load[v] > self.p:
                    return False
        for e, c in self.fixed.items():
            if not 1 <= c <= self.p:
                return False
            if any(self.fixed.get(f) == c for f in self.neighbors[e]):
                return False
        return True

    def _domain(self, e: int, color: Dict[int, int]) -> List[int]:
        taken = {color[f] for f in self.neighbors[e] if f in color}
        return [c for c in range(1, self.p + 1) if c not in taken]

    def _search(self, color: Dict[int, int], open_edges: List[int], used: set) -> Iterator[Dict[int, int]]:
        self.nodes += 1
        if not open_edges:
            yield dict(color)
            return
        best, best_key, best_domain = None, None, None
        for e in open_edges:
            domain = self._domain(e, color)
            if not domain:
                return
            key = (len(domain), -sum(1 for f in self.neighbors[e] if f not in color), e)
            if best_key is None or key < best_key:
                best, best_key, best_domain = e, key, domain
        rest = [e for e in open_edges if e != best]
        fresh_tried = False
        for c in best_domain:
            if self.break_symmetry and c not in used:
                if fresh_tried:
                    continue
                fresh_tried = True
            color[best] = c
            added = c not in used
            if added:
                used.add(c)
            yield from self._search(color, rest, used)
            if added:
                used.discard(c)
            del color[best]

    def iterate(self) -> Iterator[Dict[int, int]]:
        """All proper colorings extending `fixed` (one per color renaming of fresh colors)."""
        if not self._feasible_start():
            return
        open_edges = [e for e in self.edges if e not in self.fixed]
        yield from self._search(dict(self.fixed), open_edges, set(self.fixed.values()))

    def find(self) -> Optional[Dict[int, int]]:
        """First proper coloring extending `fixed`, or None if none exists."""
        return next(self.iterate(), None)


def find_coloring(
    g: Graph,
    p: int,
    edges: Optional[Iterable[int]] = None,
    fixed: Optional[Dict[int, int]] = None
) -> Optional[Dict[int, int]]:
    """Proper p-edge-coloring of the subgraph on `edges` extending `fixed`, or None."""
    return EdgeColoringSearch(g, p, edges, fixed).find()


def iter_colorings(
    g: Graph,
    p: int,
    edges: Optional[Iterable[int]] = None,
    fixed: Optional[Dict[int, int]] = None,
    break_symmetry: bool = True
) -> Iterator[Dict[int, int]]:
    return EdgeColoringSearch(g, p, edges, fixed, break_symmetry).iterate()


def is_colorable(g: Graph, p: int, edges: Optional[Iterable[int]] = None) -> bool:
    return find_coloring(g, p, edges) is not None
