"""
Models for the vertex-cover ILP: types, guesses and linear programs.
"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .graph import EdgeColoring


class TypeTuple(BaseModel):
    """
    Type of a matching between the vertex cover X and W = V - X.

    `x_prime` lists the covered X vertices in ascending order; `slots` has one
    entry per vertex of X, where `slots[i]` is the neighborhood (a subset of
    X) of the W vertex matched to `x_prime[i]`. Slots past len(x_prime) are
    empty.
    """

    model_config = ConfigDict(frozen=True)

    x_prime: Tuple[int, ...] = ()
    slots: Tuple[Tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def check_shape(self) -> "TypeTuple":
        k = len(self.x_prime)
        if list(self.x_prime) != sorted(set(self.x_prime)):
            raise ValueError("x_prime must be strictly ascending")
        for i, slot in enumerate(self.slots):
            if i < k and not slot:
                raise ValueError(f"Slot {i} must be nonempty")
            if i >= k and slot:
                raise ValueError(f"Slot {i} must be empty")
        for x, slot in zip(self.x_prime, self.slots):
            if x not in slot:
                raise ValueError(f"Vertex {x} is not in its slot {slot}")
        return self

    @property
    def size(self) -> int:
        return len(self.x_prime)

    def slot_of(self, x: int):
        for xi, slot in zip(self.x_prime, self.slots):
            if xi == x:
                return slot
        return None

    def __repr__(self) -> str:
        inner = "; ".join("{" + ",".join(map(str, s)) + "}" for s in self.slots[: self.size])
        return f"<Type {list(self.x_prime)}: {inner}>"


class PartialGuess(BaseModel):
    """A colored subgraph H' of G[X]: edge indices with colors 1..p0, all used."""

    model_config = ConfigDict(frozen=True)

    h_prime: Tuple[int, ...] = ()
    phi_prime: Tuple[int, ...] = ()
    p0: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_colors(self) -> "PartialGuess":
        if len(self.h_prime) != len(self.phi_prime):
            raise ValueError("h_prime and phi_prime must have equal length")
        if set(self.phi_prime) != set(range(1, self.p0 + 1)):
            raise ValueError(f"Colors {sorted(set(self.phi_prime))} do not cover 1..{self.p0} exactly")
        return self

    def color_of(self, edge: int) -> int:
        return self.phi_prime[self.h_prime.index(edge)]


class IlpVariable(BaseModel):
    """Y_{T, alpha}: number of matchings of type T colored alpha (0 = fresh colors)."""

    model_config = ConfigDict(frozen=True)

    type_index: int
    alpha: int

    @property
    def name(self) -> str:
        return f"y{self.type_index}_{self.alpha}"


class IlpConstraint(BaseModel):
    """sum(coef * var) (<= | =) rhs; `family` names the constraint family."""
    family: str
    terms: List[Tuple[int, int]] = Field(default_factory=list, description="(variable index, coefficient)")
    sense: str = Field(default="<=", pattern=r"^(<=|=)$")
    rhs: int


class IlpModel(BaseModel):
    """Integer program maximizing `objective · y` with 0 <= y <= upper_bound."""
    variables: List[IlpVariable] = Field(default_factory=list)
    objective: List[int] = Field(default_factory=list)
    constraints: List[IlpConstraint] = Field(default_factory=list)
    upper_bound: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_references(self) -> "IlpModel":
        if len(self.objective) != len(self.variables):
            raise ValueError("Objective must have one coefficient per variable")
        for row in self.constraints:
            for var, _ in row.terms:
                if not 0 <= var < len(self.variables):
                    raise ValueError(f"Constraint {row.family} references undeclared variable {var}")
        return self

    def to_text(self) -> str:
        """Plain-text dump: objective line first, then one line per constraint."""
        def render(terms) -> str:
            parts = [f"{coef}*{self.variables[var].name}" for var, coef in terms if coef]
            return " + ".join(parts) if parts else "0"

        lines = ["max: " + render(list(enumerate(self.objective)))]
        for row in self.constraints:
            lines.append(f"{render(row.terms)} {row.sense} {row.rhs}  # {row.family}")
        lines.append(f"bounds: 0 <= y <= {self.upper_bound} integer")
        return "\n".join(lines) + "\n"


class ReconstructionReport(BaseModel):
    """
    A witness rebuilt from an ILP assignment.

    `balanced` is True when every twin class stayed H-degree-balanced
    (degrees differing by at most one) after every selection.
    """
    h_edges: List[int] = Field(default_factory=list, description="Edge indices of H")
    coloring: EdgeColoring
    balanced: bool = True
    fresh_colors: int = Field(default=0, ge=0, description="Colors used beyond p0")
