"""
This module provides the `DivideColorService` class, the randomized
divide-and-color decision procedure for MECS parameterized by l.
"""

import logging
import math
from typing import Dict, List, Optional

import numpy as np

from app import config
from app.mecs.budget import Deadline
from app.mecs.core import max_matching
from app.mecs.models import EdgeColoring, Engine, MecsInstance, MecsSolution, Verdict
from app.mecs.validation import BudgetExceededError, ColoringValidator, ReconstructionError

from .padding import pad_to_multiple

logger = logging.getLogger(__name__)


class _WorkExhausted(Exception):
    pass


class DivideColorService:
    """
    Decides MECS by recursive random halving of the edge set.

    With l divisible by p and q = l / p, D(X, a) asks whether the edges X
    contain a edge-disjoint matchings of size q each. For a = 1 this is a
    maximum matching computation; otherwise X is split into L and R by a
    fair coin per edge, and D(L, ⌊a/2⌋) and D(R, ⌈a/2⌉) are tried, for
    ⌈f·2^{aq}·ln(4l)⌉ rounds (capped). YES answers carry a verified witness;
    NO answers may be wrong.
    """

    def __init__(
        self,
        rounds_factor: float = 1.0,
        l_cap: Optional[int] = None,
        max_rounds: Optional[int] = None,
        work_budget: Optional[int] = None,
        budget_ms: Optional[int] = None
    ):
        """
        Initializes the `DivideColorService`.

        Args:
            rounds_factor: Multiplier on the number of rounds per level.
            l_cap: Largest l accepted; defaults to `config.DIVIDE_COLOR_L_CAP`.
            max_rounds: Round cap per recursion node.
            work_budget: Maximum number of base-case matching computations.
            budget_ms: Wall-time budget; defaults to `config.BUDGET_MS`.
        """
        self.rounds_factor = rounds_factor
        self.l_cap = config.DIVIDE_COLOR_L_CAP if l_cap is None else l_cap
        self.max_rounds = config.DIVIDE_COLOR_MAX_ROUNDS if max_rounds is None else max_rounds
        self.work_budget = config.DIVIDE_COLOR_WORK_BUDGET if work_budget is None else work_budget
        self.budget_ms = budget_ms

    def rounds(self, a: int, q: int, l: int) -> int:
        """Rounds spent by a recursion node with a matchings of size q to find."""
        exponent = min(a * q, 60)
        wanted = math.ceil(self.rounds_factor * (2.0 ** exponent) * math.log(4 * l))
        return max(1, min(wanted, self.max_rounds))

    def confidence(self, a: int, q: int, l: int) -> float:
        """
        Lower bound on the probability that D(E, a) answers YES on a YES
        instance: P(1) = 1 and
        P(a) = 1 - (1 - 2^{-aq}·P(⌊a/2⌋)·P(⌈a/2⌉))^{rounds}.
        """
        memo: Dict[int, float] = {1: 1.0}

        def bound(b: int) -> float:
            if b not in memo:
                hit = 2.0 ** (-b * q) * bound(b // 2) * bound(b - b // 2)
                memo[b] = -math.expm1(self.rounds(b, q, l) * math.log1p(-hit)) if hit < 1 else 1.0
            return memo[b]

        return bound(a)

    def divide_and_color(self, inst: MecsInstance, rng_seed: int = 0) -> MecsSolution:
        """
        Runs the randomized procedure once.

        Args:
            inst: The instance.
            rng_seed: Seed of the Philox stream; equal seeds give equal runs.

        Returns:
            YES with a witness, NO (possibly a false negative), or BUDGET
            when the work budget runs out first.

        Raises:
            BudgetExceededError: If l exceeds the cap or the wall-time budget
                runs out.
        """
        if inst.l > self.l_cap:
            raise BudgetExceededError(f"l={inst.l} exceeds the divide-and-color cap {self.l_cap}")

        padded = pad_to_multiple(inst)
        p, l = padded.p, padded.l
        if l == 0:
            return MecsSolution(
                verdict=Verdict.YES,
                witness=EdgeColoring(p=p),
                engine=Engine.DIVIDE_COLOR.value,
                confidence=1.0,
            )

        q = l // p
        g = padded.graph
        deadline = Deadline(self.budget_ms)
        work = {"base_calls": 0, "rounds": 0}

        def solve(edges: List[int], a: int, seq: np.random.SeedSequence) -> Optional[List[List[int]]]:
            if len(edges) < a * q:
                return None
            if a == 1:
                work["base_calls"] += 1
                if work["base_calls"] > self.work_budget:
                    raise _WorkExhausted()
                found = max_matching(g, edges)
                if found.size < q:
                    return None
                return [found.sorted_edges()[:q]]

            half = a // 2
            for _ in range(self.rounds(a, q, l)):
                deadline.check("divide-and-color")
                work["rounds"] += 1
                child = seq.spawn(1)[0]
                bits = np.random.Generator(np.random.Philox(child)).integers(0, 2, size=len(edges))
                left_seq, right_seq = child.spawn(2)
                left = [e for e, bit in zip(edges, bits) if bit == 0]
                right = [e for e, bit in zip(edges, bits) if bit == 1]
                left_blocks = solve(left, half, left_seq)
                if left_blocks is None:
                    continue
                right_blocks = solve(right, a - half, right_seq)
                if right_blocks is not None:
                    return left_blocks + right_blocks
            return None

        try:
            blocks = solve(list(range(g.m)), p, np.random.SeedSequence(rng_seed))
        except _WorkExhausted:
            logger.warning(
                "divide-and-color: work budget of %d base calls exhausted",
                self.work_budget
            )
            return MecsSolution(
                verdict=Verdict.BUDGET,
                engine=Engine.DIVIDE_COLOR.value,
                confidence=0.0,
                details={**work, "budget_exhausted": True, "seed": rng_seed},
            )

        confidence = self.confidence(p, q, l)
        details = {**work, "budget_exhausted": False, "seed": rng_seed, "q": q}
        if blocks is None:
            logger.warning("divide-and-color: no witness found (one-sided NO, seed=%d)", rng_seed)
            return MecsSolution(
                verdict=Verdict.NO, engine=Engine.DIVIDE_COLOR.value, confidence=confidence, details=details
            )

        # padded edges come last; dropping them leaves at least inst.l edges
        original_m = inst.graph.m
        classes = [[e for e in block if e < original_m] for block in blocks]
        witness = EdgeColoring.from_classes(classes, inst.p)
        ok, error = ColoringValidator.verify_witness(witness, inst.graph, inst.l, inst.p)
        if not ok:
            raise ReconstructionError(f"divide-and-color produced an invalid witness: {error}")
        logger.info("divide-and-color: YES after %d rounds", work["rounds"])
        return MecsSolution(
            verdict=Verdict.YES,
            witness=witness,
            engine=Engine.DIVIDE_COLOR.value,
            confidence=confidence,
            details=details,
        )
