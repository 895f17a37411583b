"""
This module provides the `IlpService` class, the exact MECS solver
parameterized by the vertex cover number.
"""

import logging
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from app import config
from app.mecs.core import matching_number, min_vertex_cover
from app.mecs.models import EdgeColoring, Engine, Graph, IlpModel, MecsInstance, MecsSolution, PartialGuess, Verdict
from app.mecs.validation import CapValidator, ColoringValidator, ReconstructionError

from .bnb_solver import solve_ilp
from .model_builder import build_ilp
from .reconstruction import reconstruct
from .type_enumeration import CoverStructure, enumerate_types

logger = logging.getLogger(__name__)


def _restricted_growth(g: Graph, edges: Tuple[int, ...], p: int) -> Iterator[Tuple[int, ...]]:
    """Proper colorings of `edges` up to renaming: color i+1 appears only after color i."""
    colors: List[int] = []

    def extend(i: int, top: int) -> Iterator[Tuple[int, ...]]:
        if i == len(edges):
            yield tuple(colors)
            return
        u, v = g.edges[edges[i]]
        blocked = {
            colors[j] for j in range(i)
            if u in g.edges[edges[j]] or v in g.edges[edges[j]]
        }
        for c in range(1, min(top + 1, p) + 1):
            if c in blocked:
                continue
            colors.append(c)
            yield from extend(i + 1, max(top, c))
            colors.pop()

    yield from extend(0, 0)


def enumerate_guesses(g: Graph, x: List[int], p: int) -> Iterator[PartialGuess]:
    """
    All colored subgraphs (H', φ') of G[X], by |E(H')| ascending and then p0
    ascending. Subgraphs with a vertex of degree above p are skipped.
    """
    cover = set(x)
    inside = [i for i, (u, v) in enumerate(g.edges) if u in cover and v in cover]
    for size in range(len(inside) + 1):
        batch: List[PartialGuess] = []
        for h_prime in combinations(inside, size):
            load: Dict[int, int] = {}
            for e in h_prime:
                for v in g.edges[e]:
                    load[v] = load.get(v, 0) + 1
            if any(d > p for d in load.values()):
                continue
            for phi in _restricted_growth(g, h_prime, p):
                batch.append(PartialGuess(h_prime=h_prime, phi_prime=phi, p0=max(phi, default=0)))
        batch.sort(key=lambda guess: guess.p0)
        yield from batch


class IlpService:
    """
    Exact MECS by guessing the colored part inside a minimum vertex cover X
    and solving one integer program per guess for the X-W matchings.
    """

    def __init__(
        self,
        vc_cap: Optional[int] = None,
        type_cap: Optional[int] = None,
        node_cap: Optional[int] = None,
        budget_ms: Optional[int] = None,
        dump_lp: Optional[str] = None
    ):
        """
        Initializes the `IlpService`.

        Args:
            vc_cap: Largest vertex cover accepted; defaults to `config.ILP_VC_CAP`.
            type_cap: Largest number of matching types.
            node_cap: Branch-and-bound node cap per program.
            budget_ms: Wall-time budget per program.
            dump_lp: If set, the model of the accepted (or last) guess is
                written there in plain text.
        """
        self.vc_cap = config.ILP_VC_CAP if vc_cap is None else vc_cap
        self.type_cap = type_cap
        self.node_cap = node_cap
        self.budget_ms = budget_ms
        self.dump_lp = dump_lp

    def _prepare(self, g: Graph):
        # vc >= mm, so a large matching rules the instance out before the exact search
        CapValidator.require_at_most(matching_number(g), self.vc_cap, "Vertex cover size")
        x = min_vertex_cover(g)
        CapValidator.require_at_most(len(x), self.vc_cap, "Vertex cover size")
        aux = CoverStructure(g, x)
        types = enumerate_types(g, x, self.type_cap)
        return x, aux, types

    def _dump(self, model: Optional[IlpModel]) -> None:
        if self.dump_lp and model is not None:
            Path(self.dump_lp).write_text(model.to_text())

    def solve_via_ilp(self, inst: MecsInstance) -> MecsSolution:
        """
        Decides the instance.

        A guess is accepted when its program reaches l - |E(H')|; the
        reconstructed witness is verified before it is returned.

        Raises:
            InstanceTooLargeError: If the vertex cover or the type count is
                above its cap.
            BudgetExceededError: If a program needs too many nodes.
            ReconstructionError: If an accepted assignment cannot be realized.
        """
        g, p = inst.graph, inst.p
        x, aux, types = self._prepare(g)
        tried = 0
        model = None
        for guess in enumerate_guesses(g, x, p):
            tried += 1
            model = build_ilp(guess, types, aux, p)
            value, assignment = solve_ilp(model, self.node_cap, self.budget_ms)
            if value + len(guess.h_prime) < inst.l:
                continue
            report = reconstruct(guess, model, types, assignment, aux, p)
            ok, error = ColoringValidator.verify_witness(report.coloring, g, inst.l, p)
            if not ok:
                raise ReconstructionError(f"ILP witness rejected: {error}")
            self._dump(model)
            logger.info("ilp: guess %d accepted (|H'|=%d, p0=%d, value=%d)", tried, len(guess.h_prime), guess.p0, value)
            return MecsSolution(
                verdict=Verdict.YES,
                witness=report.coloring,
                engine=Engine.ILP.value,
                details={
                    "vertex_cover": x,
                    "types": len(types),
                    "guesses": tried,
                    "balanced": report.balanced,
                    "h_prime": list(guess.h_prime),
                },
            )
        self._dump(model)
        logger.info("ilp: NO after %d guesses", tried)
        return MecsSolution(
            verdict=Verdict.NO,
            engine=Engine.ILP.value,
            details={"vertex_cover": x, "types": len(types), "guesses": tried},
        )

    def ilp_maximum(self, g: Graph, p: int) -> Tuple[int, EdgeColoring]:
        """
        Largest p-edge-colorable subgraph, as the best value + |E(H')| over
        all guesses.
        """
        x, aux, types = self._prepare(g)
        best_value = -1
        best: Optional[EdgeColoring] = None
        for guess in enumerate_guesses(g, x, p):
            model = build_ilp(guess, types, aux, p)
            value, assignment = solve_ilp(model, self.node_cap, self.budget_ms)
            if value + len(guess.h_prime) > best_value:
                best_value = value + len(guess.h_prime)
                best = reconstruct(guess, model, types, assignment, aux, p).coloring
        return best_value, best
