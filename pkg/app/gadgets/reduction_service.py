"""
This module provides the `ReductionService` class, which turns a Red-Blue
Dominating Set instance into a MECS instance with p = 3.
"""

import logging
from typing import Dict, List, Sequence

from app.mecs.models import (
    BlueGadgetMap,
    GadgetLayout,
    Graph,
    MecsInstance,
    PairIdentification,
    RbdsInstance,
    RedGadgetMap,
)

from .gadget_builder import add_blue_gadget, add_red_gadget
from .module import GraphBuilder

logger = logging.getLogger(__name__)

EDGE_BOUND_FACTOR = 67


class ReductionService:
    """
    Builds G' from an RBDS instance.

    Red vertex r gets id r, blue vertex b gets id |R| + b; gadget vertices
    follow. Output pair i of r's red gadget serves the i-th edge of r (in
    input order) and input pair j of b's blue gadget serves the j-th edge of
    b. The target is l = |E(G')| - k.
    """

    def reduce_rbds(self, inst: RbdsInstance) -> GadgetLayout:
        """
        Runs the reduction.

        Returns:
            A `GadgetLayout` with the instance and where every gadget lives.
        """
        builder = GraphBuilder(n=inst.n_red + inst.n_blue)
        gadget_vertices: List[int] = []

        red: Dict[int, RedGadgetMap] = {}
        red_outputs = {}
        for r in range(inst.n_red):
            modules, root, outputs = add_red_gadget(builder, r, len(inst.red_neighbors(r)))
            red_outputs[r] = outputs
            gadget_vertices.extend(v for module in modules for v in module)
            red[r] = RedGadgetMap(vertex=r, modules=modules, root_pair=root)

        blue: Dict[int, BlueGadgetMap] = {}
        blue_inputs = {}
        for b in range(inst.n_blue):
            vertex = inst.n_red + b
            modules, cycle, pendant, inputs = add_blue_gadget(builder, vertex, len(inst.blue_neighbors(b)))
            blue_inputs[b] = inputs
            gadget_vertices.extend(v for module in modules for v in module)
            gadget_vertices.extend(cycle)
            blue[b] = BlueGadgetMap(vertex=vertex, modules=modules, cycle=cycle, pendant_edge=pendant)

        identifications = []
        red_used = {r: 0 for r in range(inst.n_red)}
        blue_used = {b: 0 for b in range(inst.n_blue)}
        for r, b in inst.edges:
            out_c, out_d = red_outputs[r][red_used[r]]
            in_a, in_b = blue_inputs[b][blue_used[b]]
            red_used[r] += 1
            blue_used[b] += 1
            pair = (builder.add_edge(out_c, in_a), builder.add_edge(out_d, in_b))
            red[r].output_pairs.append(pair)
            blue[b].input_pairs.append(pair)
            identifications.append(PairIdentification(red=r, blue=b, edges=pair))

        graph = builder.build()
        mecs = MecsInstance(graph=graph, l=max(graph.m - inst.k, 0), p=3)
        layout = GadgetLayout(
            mecs=mecs,
            source=inst,
            red=red,
            blue=blue,
            identifications=identifications,
            gadget_vertices=sorted(gadget_vertices),
        )
        if not layout.edge_bound_holds:
            logger.warning("reduction: |E(G')|=%d exceeds %d·|E(G)|", graph.m, EDGE_BOUND_FACTOR)
        logger.info("reduction: RBDS with %d edges -> G' with n=%d m=%d", len(inst.edges), graph.n, graph.m)
        return layout

    def modify_at(self, layout: GadgetLayout, r_prime: Sequence[int]) -> Graph:
        """
        Splits every r in `r_prime`: r keeps the first of its two gadget
        edges and a new vertex takes the second. Vertex count grows by
        |R'|, edge count is unchanged.
        """
        g = layout.mecs.graph
        edges = list(g.edges)
        n = g.n
        for r in sorted(set(r_prime)):
            if r not in layout.red:
                raise ValueError(f"{r} is not a red vertex")
            second = layout.red[r].root_pair[1]
            u, v = edges[second]
            x = v if u == r else u
            edges[second] = (x, n)
            n += 1
        return Graph(n=n, edges=edges)
