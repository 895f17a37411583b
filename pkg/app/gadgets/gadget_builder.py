"""
Red and blue gadgets built from modules.

Red gadget for a vertex of degree d: chains j = 0..d of two modules M_j,
N_j. M_j's c, d ports are wired to N_j's a, b ports; the e ports of M_j and
N_j feed the a, b ports of M_{j+1} (indices mod d + 1). Chain j exports N_j's
c, d ports as a pair. Chain 0's pair goes to the red vertex, the others are
the output pairs.

Blue gadget for a vertex of degree d: a cycle y_0..y_2d with y_0 joined to
the blue vertex. Module j = 1..d attaches its c, d ports to y_{2j-1},
y_{2j}; its a, b ports form input pair j and its e port ends at a pendant
vertex.
"""

from typing import List, Tuple

from app.mecs.models import GadgetFragment

from .module import GraphBuilder, port

PortPair = Tuple[int, int]


def add_red_gadget(builder: GraphBuilder, r: int, d: int) -> Tuple[List[List[int]], PortPair, List[PortPair]]:
    """
    Adds the red gadget of `r` and its two edges to `r`.

    Returns:
        The modules (M_0, N_0, M_1, N_1, ...), the edge ids at `r`, and for
        each output pair the two gadget vertices whose hanging edges still
        have to be attached.
    """
    chains = [(builder.add_module(), builder.add_module()) for _ in range(d + 1)]
    for j, (m_mod, n_mod) in enumerate(chains):
        builder.add_edge(port(m_mod, "c"), port(n_mod, "a"))
        builder.add_edge(port(m_mod, "d"), port(n_mod, "b"))
        m_next, _ = chains[(j + 1) % (d + 1)]
        builder.add_edge(port(m_mod, "e"), port(m_next, "a"))
        builder.add_edge(port(n_mod, "e"), port(m_next, "b"))

    _, n_root = chains[0]
    root = (builder.add_edge(port(n_root, "c"), r), builder.add_edge(port(n_root, "d"), r))
    outputs = [(port(n_mod, "c"), port(n_mod, "d")) for _, n_mod in chains[1:]]
    modules = [module for chain in chains for module in chain]
    return modules, root, outputs


def add_blue_gadget(builder: GraphBuilder, b: int, d: int) -> Tuple[List[List[int]], List[int], int, List[PortPair]]:
    """
    Adds the blue gadget of `b`.

    Returns:
        The modules, the cycle vertices y_0..y_2d, the edge id of y_0-b, and
        for each input pair the two module vertices awaiting their edges.
    """
    cycle = [builder.add_vertex() for _ in range(2 * d + 1)]
    for i, y in enumerate(cycle):
        builder.add_edge(y, cycle[(i + 1) % len(cycle)])
    pendant = builder.add_edge(cycle[0], b)

    modules = []
    inputs = []
    for j in range(1, d + 1):
        module = builder.add_module()
        builder.add_edge(port(module, "c"), cycle[2 * j - 1])
        builder.add_edge(port(module, "d"), cycle[2 * j])
        builder.add_stub(port(module, "e"))
        modules.append(module)
        inputs.append((port(module, "a"), port(module, "b")))
    return modules, cycle, pendant, inputs


def build_red_gadget(d: int, modified: bool = False) -> GadgetFragment:
    """
    Red gadget of degree `d` with output pairs on private stubs. Vertex 0 is
    r; when `modified`, the second edge at r goes to a separate vertex r2.
    """
    if d < 1:
        raise ValueError("Gadget degree must be at least 1")
    builder = GraphBuilder(n=1)
    modules, root, outputs = add_red_gadget(builder, 0, d)
    if modified:
        r2 = builder.add_vertex()
        u, _ = builder.edges[root[1]]
        builder.edges[root[1]] = (u, r2)
    pairs = [(builder.add_stub(x), builder.add_stub(y)) for x, y in outputs]
    return GadgetFragment(graph=builder.build(), modules=modules, pairs=pairs, root_pair=root)


def build_blue_gadget(d: int) -> GadgetFragment:
    """Blue gadget of degree `d` with input pairs on private stubs; vertex 0 is b."""
    if d < 1:
        raise ValueError("Gadget degree must be at least 1")
    builder = GraphBuilder(n=1)
    modules, cycle, pendant, inputs = add_blue_gadget(builder, 0, d)
    pairs = [(builder.add_stub(x), builder.add_stub(y)) for x, y in inputs]
    return GadgetFragment(graph=builder.build(), modules=modules, pairs=pairs, ports={"pendant": pendant})
