"""
Brute-force Red-Blue Dominating Set.
"""

from itertools import combinations
from typing import List, Optional

from app.mecs.models import RbdsInstance


class RbdsSolver:
    """Tries red subsets by increasing size."""

    def minimum_dominating_set(self, inst: RbdsInstance) -> List[int]:
        """Smallest red set dominating every blue vertex (lowest ids first among ties)."""
        covers = [set(inst.red_neighbors(r)) for r in range(inst.n_red)]
        every_blue = set(range(inst.n_blue))
        for size in range(inst.n_red + 1):
            for chosen in combinations(range(inst.n_red), size):
                dominated = set()
                for r in chosen:
                    dominated |= covers[r]
                if dominated == every_blue:
                    return list(chosen)
        return list(range(inst.n_red))

    def solve(self, inst: RbdsInstance) -> Optional[List[int]]:
        """A dominating red set of size at most k, or None."""
        best = self.minimum_dominating_set(inst)
        return best if len(best) <= inst.k else None
