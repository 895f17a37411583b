"""
Matching types between a vertex cover X and W = V - X, and the auxiliary
functions the ILP constraints are written with.
"""

import logging
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from app import config
from app.mecs.models import Graph, TypeTuple
from app.mecs.validation import InstanceTooLargeError

logger = logging.getLogger(__name__)

Neighborhood = Tuple[int, ...]


class CoverStructure:
    """
    The twin classes of W with respect to a vertex cover X.

    `gamma[S]` lists, ascending, the vertices of W whose neighborhood is
    exactly S. Only nonempty realized neighborhoods are kept; isolated
    vertices of W play no role.
    """

    def __init__(self, g: Graph, x: Sequence[int]):
        """
        Initializes the `CoverStructure`.

        Args:
            g: The graph.
            x: A vertex cover of `g`.

        Raises:
            ValueError: If `x` leaves an edge uncovered.
        """
        self.g = g
        self.x: List[int] = sorted(set(x))
        cover = set(self.x)
        for u, v in g.edges:
            if u not in cover and v not in cover:
                raise ValueError(f"Edge ({u}, {v}) is not covered by {self.x}")

        self.neighborhood: Dict[int, Neighborhood] = {}
        self.gamma: Dict[Neighborhood, List[int]] = {}
        for w in range(g.n):
            if w in cover or g.degree(w) == 0:
                continue
            s = tuple(g.neighbors(w))
            self.neighborhood[w] = s
            self.gamma.setdefault(s, []).append(w)

    @property
    def realized(self) -> List[Neighborhood]:
        return sorted(self.gamma)

    def is_present(self, x: int, t: TypeTuple) -> int:
        return 1 if x in t.x_prime else 0

    def false_twins(self, w: int) -> int:
        """Number of W vertices with the same neighborhood as `w` (itself included)."""
        return len(self.gamma[self.neighborhood[w]])

    def nr_nbr_present(self, w: int, t: TypeTuple) -> int:
        """Number of slots of `t` equal to N(w)."""
        s = self.neighborhood[w]
        return sum(1 for slot in t.slots if slot == s)

    def __repr__(self) -> str:
        return f"<CoverStructure(X={self.x}, classes={len(self.gamma)})>"


def aux_functions(g: Graph, x: Sequence[int]) -> CoverStructure:
    """is_present, false_twins and nr_nbr_present for cover `x`, bundled."""
    return CoverStructure(g, x)


def enumerate_types(g: Graph, x: Sequence[int], cap: Optional[int] = None) -> List[TypeTuple]:
    """
    All types of matchings between X and W.

    A type picks X' ⊆ X (ascending) and for each x_i in X' a realized
    neighborhood S_i ∋ x_i, such that no S appears more than |Γ(S)| times.
    Slot i is paired with x_i, so each matching has exactly one type.

    Raises:
        InstanceTooLargeError: If there are more types than `cap`.
    """
    cap = config.ILP_TYPE_CAP if cap is None else cap
    cover = CoverStructure(g, x)
    width = len(cover.x)
    options = {v: [s for s in cover.realized if v in s] for v in cover.x}

    types: List[TypeTuple] = []
    for k in range(width + 1):
        for x_prime in combinations(cover.x, k):
            for slots in product(*(options[v] for v in x_prime)):
                if any(slots.count(s) > len(cover.gamma[s]) for s in set(slots)):
                    continue
                types.append(TypeTuple(x_prime=x_prime, slots=tuple(slots) + ((),) * (width - k)))
                if len(types) > cap:
                    raise InstanceTooLargeError(f"More than {cap} matching types for |X|={width}")
    logger.debug("enumerate_types: %d types over X=%s", len(types), cover.x)
    return types
