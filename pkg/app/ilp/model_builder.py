"""
Builds the integer program of one partial guess (H', φ').
"""

import logging
from typing import Dict, List, Sequence, Tuple

from app.mecs.models import IlpConstraint, IlpModel, IlpVariable, PartialGuess, TypeTuple

from .type_enumeration import CoverStructure

logger = logging.getLogger(__name__)


def build_ilp(guess: PartialGuess, types: Sequence[TypeTuple], aux: CoverStructure, p: int) -> IlpModel:
    """
    The program over Y_{T,α}, the number of matchings of type T colored α
    (α = 0 counts matchings that get a color unused by H').

    Families:
        cover_capacity: Σ_{T ∋ x, α} Y ≤ p - deg_H'(x) for each x.
        color_conflict: Y_{T, φ'(xx̂)} = 0 for each H' edge at x and T ∋ x.
        twin_capacity: Σ Y·nr_nbr_present(w, T) ≤ p·false_twins(w), once per class.
        color_unique: Σ_T Y_{T,α} ≤ 1 for α = 1..p0.
        matching_budget: Σ Y ≤ p.
        pair_capacity: Σ_{T: slot of x is S, α} Y ≤ |Γ(S)| for x ∈ S.
        fresh_color_budget: Σ_T Y_{T,0} ≤ p - p0.

    The objective is Σ Y_{T,α}·|T|; every variable ranges over 0..p.
    """
    g = aux.g
    variables: List[IlpVariable] = []
    index: Dict[Tuple[int, int], int] = {}
    for t_idx in range(len(types)):
        for alpha in range(guess.p0 + 1):
            index[(t_idx, alpha)] = len(variables)
            variables.append(IlpVariable(type_index=t_idx, alpha=alpha))
    objective = [types[var.type_index].size for var in variables]
    alphas = range(guess.p0 + 1)

    h_degree: Dict[int, int] = {}
    h_colors: Dict[int, List[int]] = {}
    for edge, color in zip(guess.h_prime, guess.phi_prime):
        for v in g.edges[edge]:
            h_degree[v] = h_degree.get(v, 0) + 1
            h_colors.setdefault(v, []).append(color)

    rows: List[IlpConstraint] = []
    for x in aux.x:
        terms = [
            (index[(t_idx, a)], 1)
            for t_idx, t in enumerate(types) if aux.is_present(x, t)
            for a in alphas
        ]
        rows.append(IlpConstraint(family="cover_capacity", terms=terms, rhs=p - h_degree.get(x, 0)))

    for x in aux.x:
        for color in sorted(set(h_colors.get(x, []))):
            for t_idx, t in enumerate(types):
                if aux.is_present(x, t):
                    rows.append(IlpConstraint(
                        family="color_conflict", terms=[(index[(t_idx, color)], 1)], sense="=", rhs=0
                    ))

    for s in aux.realized:
        w = aux.gamma[s][0]
        terms = []
        for t_idx, t in enumerate(types):
            coef = aux.nr_nbr_present(w, t)
            if coef:
                terms.extend((index[(t_idx, a)], coef) for a in alphas)
        rows.append(IlpConstraint(family="twin_capacity", terms=terms, rhs=p * aux.false_twins(w)))

    for alpha in range(1, guess.p0 + 1):
        terms = [(index[(t_idx, alpha)], 1) for t_idx in range(len(types))]
        rows.append(IlpConstraint(family="color_unique", terms=terms, rhs=1))

    rows.append(IlpConstraint(family="matching_budget", terms=[(i, 1) for i in range(len(variables))], rhs=p))

    for x in aux.x:
        for s in aux.realized:
            if x not in s:
                continue
            terms = [
                (index[(t_idx, a)], 1)
                for t_idx, t in enumerate(types) if t.slot_of(x) == s
                for a in alphas
            ]
            if terms:
                rows.append(IlpConstraint(family="pair_capacity", terms=terms, rhs=len(aux.gamma[s])))

    fresh = [(index[(t_idx, 0)], 1) for t_idx in range(len(types))]
    rows.append(IlpConstraint(family="fresh_color_budget", terms=fresh, rhs=p - guess.p0))

    logger.debug(
        "build_ilp: %d variables, %d constraints for |H'|=%d p0=%d",
        len(variables), len(rows), len(guess.h_prime), guess.p0
    )
    return IlpModel(variables=variables, objective=objective, constraints=rows, upper_bound=p)
