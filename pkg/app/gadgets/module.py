"""
The seven-vertex inverting module and an incremental graph builder.

Local vertex names: U, W, A, B, C, D, E. Internal edges are U-A, A-W, U-B,
B-C, C-W, U-D, D-E and E-W; each of A..E has one hanging edge, so every
module vertex has degree three once the hanging edges are attached. The
hanging edges are named by the port they leave from:

    a at B, b at E, c at C, d at D, e at A

In every proper 3-edge-coloring either a and b share a color (and c, d, e
are pairwise different) or c and d do (and a, b, e are pairwise different).
"""

from typing import Dict, List, Tuple

from app.mecs.models import GadgetFragment, Graph

U, W, A, B, C, D, E = range(7)
MODULE_SIZE = 7
MODULE_EDGES: Tuple[Tuple[int, int], ...] = (
    (U, A), (A, W), (U, B), (B, C), (C, W), (U, D), (D, E), (E, W),
)
PORTS: Dict[str, int] = {"a": B, "b": E, "c": C, "d": D, "e": A}
PORT_NAMES = ("a", "b", "c", "d", "e")


class GraphBuilder:
    """Accumulates vertices and edges; edge indices follow insertion order."""

    def __init__(self, n: int = 0):
        self.n = n
        self.edges: List[Tuple[int, int]] = []

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> int:
        self.edges.append((u, v))
        return len(self.edges) - 1

    def add_module(self) -> List[int]:
        """Adds one module; returns its vertex ids in U, W, A, B, C, D, E order."""
        vertices = [self.add_vertex() for _ in range(MODULE_SIZE)]
        for u, v in MODULE_EDGES:
            self.add_edge(vertices[u], vertices[v])
        return vertices

    def add_stub(self, v: int) -> int:
        """Hangs a fresh degree-1 vertex on `v`; returns the edge index."""
        return self.add_edge(v, self.add_vertex())

    def build(self) -> Graph:
        return Graph(n=self.n, edges=self.edges)


def port(module: List[int], name: str) -> int:
    """Vertex id of the module vertex carrying hanging edge `name`."""
    return module[PORTS[name]]


def build_module() -> GadgetFragment:
    """One module with each of its five hanging edges on a private stub."""
    builder = GraphBuilder()
    module = builder.add_module()
    ports = {name: builder.add_stub(port(module, name)) for name in PORT_NAMES}
    return GadgetFragment(graph=builder.build(), modules=[module], ports=ports)
