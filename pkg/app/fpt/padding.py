"""
Padding a MECS instance so that l is a multiple of p.
"""

from app.mecs.models import Graph, MecsInstance


def pad_to_multiple(inst: MecsInstance) -> MecsInstance:
    """
    Adds p - r isolated edges when l ≡ r (mod p), r > 0, and raises l to
    l + p - r. New vertices and edges are appended after the existing ones,
    so original edge indices are unchanged.
    """
    r = inst.l % inst.p
    if r == 0:
        return inst
    extra = inst.p - r
    g = inst.graph
    edges = list(g.edges) + [(g.n + 2 * i, g.n + 2 * i + 1) for i in range(extra)]
    return MecsInstance(graph=Graph(n=g.n + 2 * extra, edges=edges), l=inst.l + extra, p=inst.p)
