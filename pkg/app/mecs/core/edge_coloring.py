"""
Vizing edge coloring, balanced recoloring and the class-selection lower bound.
"""

import logging
from typing import Dict, Iterable, List, Optional

from ..models.graph import EdgeColoring, Graph

logger = logging.getLogger(__name__)


class _FanColorer:
    """
    Misra-Gries fan recoloring with Δ + 1 colors on a simple graph.

    `at[v]` maps a color to the edge of that color at v.
    """

    def __init__(self, g: Graph, edges: List[int]):
        self.g = g
        self.edges = edges
        degree = [0] * g.n
        for i in edges:
            u, v = g.edges[i]
            degree[u] += 1
            degree[v] += 1
        self.palette = max(degree, default=0) + 1
        self.color: Dict[int, int] = {}
        self.at: List[Dict[int, int]] = [{} for _ in range(g.n)]
        self.active = set(edges)

    def _set(self, edge: int, c: int) -> None:
        for v in self.g.edges[edge]:
            self.at[v][c] = edge
        self.color[edge] = c

    def _unset(self, edge: int) -> None:
        c = self.color.pop(edge)
        for v in self.g.edges[edge]:
            del self.at[v][c]

    def _free(self, v: int) -> int:
        for c in range(1, self.palette + 1):
            if c not in self.at[v]:
                return c
        raise AssertionError(f"No free color at vertex {v}")

    def _fan(self, u: int, v: int) -> List[int]:
        fan = [v]
        in_fan = {v}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for w in self.g.neighbors(u):
                if w in in_fan:
                    continue
                e = self.g.edge_index(u, w)
                if e in self.color and self.color[e] not in self.at[last]:
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        return fan

    def _invert_path(self, u: int, c: int, d: int) -> None:
        path = []
        vertex, want = u, d
        while want in self.at[vertex]:
            e = self.at[vertex][want]
            path.append(e)
            vertex = self.g.other_end(e, vertex)
            want = c if want == d else d
        old = {e: self.color[e] for e in path}
        for e in path:
            self._unset(e)
        for e in path:
            self._set(e, c if old[e] == d else d)

    def _color_edge(self, edge: int) -> None:
        u, v = self.g.edges[edge]
        fan = self._fan(u, v)
        c = self._free(u)
        d = self._free(fan[-1])
        if c != d:
            self._invert_path(u, c, d)
        for i, w in enumerate(fan):
            if d not in self.at[w]:
                fan = fan[: i + 1]
                break
        fan_edges = [self.g.edge_index(u, w) for w in fan]
        shifted = [self.color[e] for e in fan_edges[1:]]
        for e in fan_edges[1:]:
            self._unset(e)
        for e, col in zip(fan_edges[:-1], shifted):
            self._set(e, col)
        self._set(fan_edges[-1], d)

    def run(self) -> Dict[int, int]:
        for edge in self.edges:
            self._color_edge(edge)
        return self.color


def vizing_color(g: Graph, edges: Optional[Iterable[int]] = None) -> EdgeColoring:
    """
    Total proper coloring of `g` (or of the subgraph on `edges`) with at most
    Δ + 1 colors, colors numbered from 1.
    """
    chosen = sorted(range(g.m) if edges is None else set(edges))
    colorer = _FanColorer(g, chosen)
    assignment = colorer.run()
    return EdgeColoring(assignment=dict(assignment), p=colorer.palette)


def _alternating_components(g: Graph, assignment: Dict[int, int], a: int, b: int) -> List[List[int]]:
    """Components (paths or even cycles) of the edges colored a or b."""
    members = sorted(e for e, c in assignment.items() if c in (a, b))
    by_vertex: Dict[int, List[int]] = {}
    for e in members:
        for v in g.edges[e]:
            by_vertex.setdefault(v, []).append(e)
    seen = set()
    components = []
    for start in members:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            e = stack.pop()
            comp.append(e)
            for v in g.edges[e]:
                for f in by_vertex[v]:
                    if f not in seen:
                        seen.add(f)
                        stack.append(f)
        components.append(sorted(comp))
    return components


def rebalance(c: EdgeColoring, g: Graph) -> EdgeColoring:
    """
    Balanced recoloring: same colored edges, still proper, and any two of
    the p class sizes differ by at most one.

    While the largest class a exceeds the smallest class b by two or more,
    some component of the a/b subgraph is a path with one more a-edge than
    b-edges; swapping a and b along it moves one edge from a to b.
    """
    assignment = dict(c.assignment)
    swaps = 0
    while True:
        sizes = [0] * c.p
        for col in assignment.values():
            sizes[col - 1] += 1
        a = max(range(c.p), key=lambda i: (sizes[i], -i)) + 1
        b = min(range(c.p), key=lambda i: (sizes[i], i)) + 1
        if sizes[a - 1] - sizes[b - 1] <= 1:
            break
        for comp in _alternating_components(g, assignment, a, b):
            count_a = sum(1 for e in comp if assignment[e] == a)
            if count_a == len(comp) - count_a + 1:
                for e in comp:
                    assignment[e] = b if assignment[e] == a else a
                swaps += 1
                break
        else:
            raise AssertionError("Input coloring is not proper")
    logger.debug("rebalance: %d path swaps", swaps)
    return EdgeColoring(assignment=assignment, p=c.p)


def lower_bound_by_classes(g: Graph, p: int, edges: Optional[Iterable[int]] = None) -> EdgeColoring:
    """
    A p-edge-colorable subgraph found in polynomial time: Vizing-color the
    graph and keep its p largest color classes.
    """
    full = vizing_color(g, edges)
    classes = sorted(full.classes().items(), key=lambda kv: (-len(kv[1]), kv[0]))
    kept = [members for _, members in classes[:p]]
    return EdgeColoring.from_classes(kept, p)
