"""
Exact integer programming by depth-first branch-and-bound over the LP
relaxation (HiGHS through scipy).
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from app import config
from app.mecs.budget import Deadline
from app.mecs.models import IlpModel
from app.mecs.validation import BudgetExceededError

logger = logging.getLogger(__name__)

EPS = 1e-6


def _matrix(rows, size: int) -> Optional[csr_matrix]:
    if not rows:
        return None
    data, row_idx, col_idx = [], [], []
    for r, row in enumerate(rows):
        for var, coef in row.terms:
            data.append(coef)
            row_idx.append(r)
            col_idx.append(var)
    return csr_matrix((data, (row_idx, col_idx)), shape=(len(rows), size))


def solve_ilp(
    model: IlpModel,
    node_cap: Optional[int] = None,
    budget_ms: Optional[int] = None
) -> Tuple[int, List[int]]:
    """
    Maximizes the model's objective over integers in 0..upper_bound.

    Nodes are explored depth first. A node is pruned when its relaxation is
    infeasible or ⌊LP bound⌋ does not beat the incumbent; otherwise the most
    fractional variable (lowest index on ties) is branched on, ceiling side
    first. The all-zero point is the initial incumbent.

    Returns:
        The optimum and an optimal assignment.

    Raises:
        BudgetExceededError: If more than `node_cap` nodes are needed or the
            wall-time budget runs out.
    """
    node_cap = config.ILP_NODE_CAP if node_cap is None else node_cap
    size = len(model.variables)
    if size == 0:
        return 0, []

    deadline = Deadline(budget_ms)
    c = -np.asarray(model.objective, dtype=float)
    upper = [r for r in model.constraints if r.sense == "<="]
    equal = [r for r in model.constraints if r.sense == "="]
    a_ub = _matrix(upper, size)
    b_ub = np.array([r.rhs for r in upper], dtype=float) if upper else None
    a_eq = _matrix(equal, size)
    b_eq = np.array([r.rhs for r in equal], dtype=float) if equal else None

    best_value = 0
    best = [0] * size
    stack = [(np.zeros(size), np.full(size, float(model.upper_bound)))]
    nodes = 0
    while stack:
        nodes += 1
        if nodes > node_cap:
            raise BudgetExceededError(f"ILP branch-and-bound exceeded {node_cap} nodes")
        deadline.check("ILP branch-and-bound")
        lower, upper_b = stack.pop()
        res = linprog(
            c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq,
            bounds=list(zip(lower, upper_b)), method="highs",
        )
        if res.status != 0:
            continue
        bound = -res.fun
        if math.floor(bound + EPS) <= best_value:
            continue

        x = res.x
        frac = np.abs(x - np.round(x))
        candidates = np.flatnonzero(frac > EPS)
        if candidates.size == 0:
            values = [int(round(v)) for v in x]
            best_value = int(sum(o * v for o, v in zip(model.objective, values)))
            best = values
            logger.debug("bnb: incumbent %d at node %d", best_value, nodes)
            continue

        # argmax returns the first maximum, i.e. the lowest index
        j = int(candidates[np.argmax(frac[candidates])])
        floor_upper = upper_b.copy()
        floor_upper[j] = math.floor(x[j])
        ceil_lower = lower.copy()
        ceil_lower[j] = math.ceil(x[j])
        stack.append((lower, floor_upper))
        stack.append((ceil_lower, upper_b))

    logger.debug("bnb: optimum %d after %d nodes", best_value, nodes)
    return best_value, best
