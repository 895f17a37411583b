"""
This module provides the `KernelService` class, which shrinks a MECS
instance to a kernel around a deg-1-modulator.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from app.mecs.core import deg1_modulator_3approx, is_deg1_modulator, parameter_precheck
from app.mecs.models import (
    Graph,
    KernelStep,
    KernelTrace,
    MecsInstance,
    PrecheckOutcome,
    RuleId,
)

from .expansion import find_expansion

logger = logging.getLogger(__name__)

RuleApplication = Tuple[MecsInstance, KernelStep]


def vacuous_instance() -> MecsInstance:
    """Smallest YES instance: one edge, l = 1, p = 1."""
    return MecsInstance(graph=Graph(n=2, edges=[(0, 1)]), l=1, p=1)


def trivial_no_instance() -> MecsInstance:
    """Smallest NO instance: no vertices, l = 1, p = 1."""
    return MecsInstance(graph=Graph(n=0), l=1, p=1)


def residual_components(g: Graph, x: Sequence[int]) -> List[List[int]]:
    """Components of g - X as sorted vertex lists, ordered by smallest vertex."""
    nxg = g.to_networkx()
    nxg.remove_nodes_from(x)
    return sorted((sorted(c) for c in nx.connected_components(nxg)), key=lambda c: c[0])


def _edges_within(g: Graph, vertices: Sequence[int]) -> int:
    inside = set(vertices)
    return sum(1 for u, v in g.edges if u in inside and v in inside)


def _shrink(inst: MecsInstance, deleted: Sequence[int], decrease: int) -> MecsInstance:
    graph, _ = inst.graph.delete_vertices(deleted)
    return MecsInstance(graph=graph, l=inst.l - decrease, p=inst.p)


def rule1_drop_isolated_components(inst: MecsInstance, x: Sequence[int]) -> Optional[RuleApplication]:
    """
    Deletes the first component of g - X without a neighbor in X.

    l drops by the component's edge count (0 or 1), clamped at l.

    Returns:
        The reduced instance and the applied step (ids of `inst`), or None.
    """
    g = inst.graph
    modulator = set(x)
    for comp in residual_components(g, x):
        if any(w in modulator for v in comp for w in g.neighbors(v)):
            continue
        decrease = min(_edges_within(g, comp), inst.l)
        step = KernelStep(rule=RuleId.RR1, deleted=comp, l_decrease=decrease)
        return _shrink(inst, comp, decrease), step
    return None


def rule2_expansion_delete(inst: MecsInstance, x: Sequence[int]) -> Optional[RuleApplication]:
    """
    Deletes X' and V(C') for a p-expansion of X' into components C'.

    The expansion is searched in the bipartite graph between X and the
    components of g - X (x adjacent to C iff x has a neighbor in C) once
    there are at least p·|X| components. l drops by p·|X'| + |E(C')|,
    clamped at l.

    The rule needs p >= 2: with one color a vertex of X' and the edge of
    its component cannot both be colored, so it never applies for p = 1.

    Returns:
        The reduced instance and the applied step (ids of `inst`), or None.
    """
    g = inst.graph
    if not x or inst.p < 2:
        return None
    comps = residual_components(g, x)
    if len(comps) < inst.p * len(x):
        return None

    modulator = set(x)
    neighbors: Dict[int, List[int]] = {}
    for i, comp in enumerate(comps):
        neighbors[i] = sorted({w for v in comp for w in g.neighbors(v) if w in modulator})

    expansion = find_expansion(sorted(x), neighbors, inst.p)
    if expansion is None:
        return None

    removed_comps = [v for c in expansion.c_prime for v in comps[c]]
    deleted = sorted(set(expansion.x_prime) | set(removed_comps))
    decrease = min(inst.p * len(expansion.x_prime) + _edges_within(g, removed_comps), inst.l)
    step = KernelStep(
        rule=RuleId.RR2,
        deleted=deleted,
        l_decrease=decrease,
        modulator_removed=list(expansion.x_prime),
    )
    return _shrink(inst, deleted, decrease), step


class KernelService:
    """
    Kernelization around a deg-1-modulator.

    The precheck may answer YES outright, in which case the kernel is the
    vacuous instance. For p = 1 the problem is maximum matching, so a
    precheck without a witness means l > mm(G) and the kernel is the trivial
    NO instance. Otherwise a deg-1-modulator X is computed and RR1 runs to a
    fixpoint before each RR2 attempt, until neither applies or l hits 0.
    """

    def __init__(self, modulator: Optional[Sequence[int]] = None):
        """
        Initializes the `KernelService`.

        Args:
            modulator: A deg-1-modulator to use instead of the 3-approximation.
        """
        self.modulator = None if modulator is None else sorted(modulator)

    def kernelize(self, inst: MecsInstance) -> KernelTrace:
        """
        Runs the precheck and both reduction rules.

        Returns:
            A `KernelTrace`; its `final` instance is YES iff `inst` is.

        Raises:
            ValueError: If the supplied modulator leaves a vertex of degree 2.
        """
        pre = parameter_precheck(inst)
        if pre.outcome == PrecheckOutcome.YES_WITNESS or inst.l == 0:
            logger.info("kernelize: precheck answered YES, returning vacuous instance")
            return KernelTrace(
                original=inst,
                final=vacuous_instance(),
                early_yes=True,
                vacuous=True,
                matching_size=pre.matching_size,
                vc_upper=2 * pre.matching_size,
            )

        if inst.p == 1:
            logger.info("kernelize: p=1 and l=%d > mm=%d, returning trivial NO instance", inst.l, pre.matching_size)
            return KernelTrace(
                original=inst,
                final=trivial_no_instance(),
                decided_no=True,
                matching_size=pre.matching_size,
                vc_upper=2 * pre.matching_size,
            )

        g = inst.graph
        if self.modulator is not None:
            if not is_deg1_modulator(g, self.modulator):
                raise ValueError("Supplied vertex set is not a deg-1-modulator")
            modulator = list(self.modulator)
        else:
            modulator = deg1_modulator_3approx(g)

        current = inst
        labels = list(range(g.n))
        x = list(modulator)
        steps: List[KernelStep] = []

        while current.l > 0:
            applied = rule1_drop_isolated_components(current, x) or rule2_expansion_delete(current, x)
            if applied is None:
                break
            current, step = applied
            gone = set(step.deleted)
            kept = [v for v in range(len(labels)) if v not in gone]
            new_id = {old: new for new, old in enumerate(kept)}
            steps.append(step.model_copy(update={
                "deleted": sorted(labels[v] for v in step.deleted),
                "modulator_removed": sorted(labels[v] for v in step.modulator_removed),
            }))
            x = [new_id[v] for v in x if v not in gone]
            labels = [labels[v] for v in kept]
            logger.debug("kernelize: %s deleted %d vertices, l -> %d", step.rule.value, len(gone), current.l)

        if current.l == 0:
            logger.info("kernelize: l reached 0 after %d steps, returning vacuous instance", len(steps))
            return KernelTrace(
                original=inst,
                final=vacuous_instance(),
                modulator=modulator,
                steps=steps,
                vacuous=True,
                matching_size=pre.matching_size,
                vc_upper=2 * pre.matching_size,
            )

        units = len(x) + len(residual_components(current.graph, x))
        logger.info(
            "kernelize: n %d -> %d, l %d -> %d, |X|=%d",
            g.n, current.graph.n, inst.l, current.l, len(modulator)
        )
        return KernelTrace(
            original=inst,
            final=current,
            modulator=modulator,
            steps=steps,
            vertex_map=labels,
            size_units=units,
            matching_size=pre.matching_size,
            vc_upper=2 * pre.matching_size,
        )
