"""
Rebuilds a colored subgraph H from an ILP assignment.
"""

import logging
from typing import Dict, List, Sequence, Set, Tuple

from app.mecs.models import EdgeColoring, IlpModel, PartialGuess, ReconstructionReport, TypeTuple
from app.mecs.validation import ColoringValidator, ReconstructionError

from .type_enumeration import CoverStructure, Neighborhood

logger = logging.getLogger(__name__)


def _unroll(model: IlpModel, types: Sequence[TypeTuple], assignment: Sequence[int], p0: int) -> List[Tuple[TypeTuple, int]]:
    """One (type, color) per matching; fresh colors are p0+1, p0+2, ... in variable order."""
    matchings = []
    fresh = p0
    for var, value in zip(model.variables, assignment):
        t = types[var.type_index]
        if value <= 0 or t.size == 0:
            continue
        for _ in range(value):
            if var.alpha == 0:
                fresh += 1
                matchings.append((t, fresh))
            else:
                matchings.append((t, var.alpha))
    return matchings


def _fill_class(
    members: List[int],
    requests: List[Tuple[int, int]],
    p: int
) -> Tuple[Dict[Tuple[int, int], int], bool]:
    """
    Assigns a W vertex of one twin class to every (matching, x) request.

    A candidate w must be unused in the request's matching, have H-degree
    at most p - 1, and not already be joined to x in H. Candidates are
    tried by current H-degree, then index; dead ends backtrack.
    """
    degree = {w: 0 for w in members}
    in_matching: Set[Tuple[int, int]] = set()
    pairs: Set[Tuple[int, int]] = set()
    choice: Dict[Tuple[int, int], int] = {}
    balance: List[bool] = []

    def place(i: int) -> bool:
        if i == len(requests):
            return True
        mi, x = requests[i]
        candidates = [
            w for w in members
            if (mi, w) not in in_matching and degree[w] <= p - 1 and (x, w) not in pairs
        ]
        candidates.sort(key=lambda w: (degree[w], w))
        for w in candidates:
            degree[w] += 1
            in_matching.add((mi, w))
            pairs.add((x, w))
            choice[(mi, x)] = w
            balance.append(max(degree.values()) - min(degree.values()) <= 1)
            if place(i + 1):
                return True
            balance.pop()
            del choice[(mi, x)]
            pairs.discard((x, w))
            in_matching.discard((mi, w))
            degree[w] -= 1
        return False

    if not place(0):
        raise ReconstructionError(f"No vertex assignment for twin class {members}")
    return choice, all(balance)


def reconstruct(
    guess: PartialGuess,
    model: IlpModel,
    types: Sequence[TypeTuple],
    assignment: Sequence[int],
    aux: CoverStructure,
    p: int
) -> ReconstructionReport:
    """
    Turns Y into matchings between X and W and merges them with (H', φ').

    Each unit of Y_{T,α} becomes one matching colored α, or a fresh color
    when α = 0. Twin classes are filled independently.

    Raises:
        ReconstructionError: If the assignment cannot be realized or the
            result is not a proper coloring.
    """
    g = aux.g
    matchings = _unroll(model, types, assignment, guess.p0)

    requests: Dict[Neighborhood, List[Tuple[int, int]]] = {}
    for mi, (t, _) in enumerate(matchings):
        for x, slot in zip(t.x_prime, t.slots):
            requests.setdefault(slot, []).append((mi, x))

    colors: Dict[int, int] = dict(zip(guess.h_prime, guess.phi_prime))
    balanced = True
    for s in sorted(requests):
        choice, class_balanced = _fill_class(aux.gamma[s], requests[s], p)
        balanced = balanced and class_balanced
        for (mi, x), w in choice.items():
            edge = g.edge_index(x, w)
            if edge is None or edge in colors:
                raise ReconstructionError(f"Edge {x}-{w} missing or used twice")
            colors[edge] = matchings[mi][1]

    fresh = max((color for _, color in matchings), default=guess.p0) - guess.p0
    coloring = EdgeColoring(assignment=colors, p=p) if fresh + guess.p0 <= p else None
    if coloring is None:
        raise ReconstructionError(f"Reconstruction needs {guess.p0 + fresh} colors, more than p={p}")
    ok, error = ColoringValidator.verify_coloring(coloring, g)
    if not ok:
        raise ReconstructionError(f"Reconstructed coloring is not proper: {error}")
    logger.debug("reconstruct: |H|=%d from %d matchings, balanced=%s", len(colors), len(matchings), balanced)
    return ReconstructionReport(
        h_edges=sorted(colors),
        coloring=coloring,
        balanced=balanced,
        fresh_colors=max(fresh, 0),
    )
