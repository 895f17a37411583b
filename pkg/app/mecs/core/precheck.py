"""
Parameter precheck: either an immediate YES witness from at most two
matchings, or certified bounds on the vertex cover and the deg-1-modulator.
"""

import logging

from ..models.graph import EdgeColoring, MecsInstance
from ..models.solution import PrecheckResult
from ..models.types import PrecheckOutcome
from .matching import max_matching

logger = logging.getLogger(__name__)


def parameter_precheck(inst: MecsInstance) -> PrecheckResult:
    """
    Runs the two-matching precheck on an instance.

    With M1 a maximum matching of G and M2 a maximum matching of G - M1:

    - l <= |M1|: M1 colored 1 is a witness.
    - |M1| + |M2| >= l and p >= 2: M1 and M2 colored 1 and 2 are a witness.
    - otherwise l > |M1| >= vc(G)/2, and V(M2) is a deg-1-modulator with
      |V(M2)| < 2(l - mm(G)) whenever |M1| + |M2| < l.

    Returns:
        A `PrecheckResult` with outcome YES_WITNESS or BOUNDS.
    """
    g = inst.graph
    m1 = max_matching(g)
    if inst.l <= m1.size:
        logger.info("precheck: l=%d <= mm=%d, one matching suffices", inst.l, m1.size)
        return PrecheckResult(
            outcome=PrecheckOutcome.YES_WITNESS,
            witness=EdgeColoring.from_classes([m1.sorted_edges()], inst.p),
            matching_size=m1.size,
        )

    rest = [i for i in range(g.m) if i not in m1.edge_indices]
    m2 = max_matching(g, rest)
    if m1.size + m2.size >= inst.l and inst.p >= 2:
        logger.info("precheck: two matchings cover %d >= l=%d", m1.size + m2.size, inst.l)
        return PrecheckResult(
            outcome=PrecheckOutcome.YES_WITNESS,
            witness=EdgeColoring.from_classes([m1.sorted_edges(), m2.sorted_edges()], inst.p),
            matching_size=m1.size,
            second_matching_size=m2.size,
        )

    modulator = sorted({v for i in m2.edge_indices for v in g.edges[i]})
    return PrecheckResult(
        outcome=PrecheckOutcome.BOUNDS,
        matching_size=m1.size,
        second_matching_size=m2.size,
        vc_upper=2 * m1.size,
        modulator=modulator,
        vc_bound_holds=2 * m1.size < 2 * inst.l,
        modulator_bound_holds=len(modulator) < 2 * (inst.l - m1.size),
    )
