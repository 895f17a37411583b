"""
Edge-labeled graphs for the rainbow matching reduction.
"""

from typing import Tuple

from pydantic import BaseModel, Field, model_validator

from .graph import Graph


class LabeledGraph(BaseModel):
    """A graph whose edge `i` carries the positive label `labels[i]`."""
    graph: Graph
    labels: Tuple[int, ...] = Field(default=(), description="Label per edge index")

    @model_validator(mode="after")
    def check_labels(self) -> "LabeledGraph":
        if len(self.labels) != self.graph.m:
            raise ValueError(f"Expected {self.graph.m} labels, got {len(self.labels)}")
        if any(label < 1 for label in self.labels):
            raise ValueError("Labels must be positive integers")
        return self


class RainbowInstance(BaseModel):
    """Find a matching of size >= k with pairwise distinct labels."""
    lg: LabeledGraph
    k: int = Field(..., ge=0)
