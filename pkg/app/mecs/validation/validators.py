"""
Errors and validators for the MECS toolkit.

Validators return `(is_valid, error_message)` tuples; callers that need a
hard failure raise one of the `MecsError` subclasses defined here.
"""

from typing import Dict, Optional, Tuple

from ..models.graph import EdgeColoring, Graph


class MecsError(Exception):
    """Base class for every toolkit error."""
    pass


class GraphFormatError(MecsError):
    """Malformed text input."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class InstanceTooLargeError(MecsError):
    """A configured cap is exceeded before any work starts."""
    pass


class BudgetExceededError(MecsError):
    """A work or wall-time budget ran out during a run."""
    pass


class ReconstructionError(MecsError):
    """An ILP assignment could not be turned into a coloring."""
    pass


class ClaimEnumerationError(MecsError):
    """A gadget is too large for exhaustive claim verification."""
    pass


class ColoringValidator:
    """
    Checks edge colorings against a graph.
    """

    @classmethod
    def verify_coloring(
        cls,
        coloring: EdgeColoring,
        graph: Graph
    ) -> Tuple[bool, Optional[str]]:
        """
        Validates that a coloring is a proper partial p-edge-coloring of a
        graph.

        Args:
            coloring: The coloring to check.
            graph: The graph whose edge indices the coloring refers to.

        Returns:
            A tuple containing a boolean indicating whether the coloring is
            valid, and a message naming the first violation if it is not.
        """
        seen: Dict[Tuple[int, int], int] = {}
        for edge in sorted(coloring.assignment):
            color = coloring.assignment[edge]
            if not 0 <= edge < graph.m:
                return False, f"Edge index {edge} does not exist (m={graph.m})"
            if not 1 <= color <= coloring.p:
                return False, f"Edge {edge} has color {color} outside 1..{coloring.p}"
            for v in graph.edges[edge]:
                other = seen.get((v, color))
                if other is not None:
                    return False, (
                        f"Edges {other} {graph.edges[other]} and {edge} {graph.edges[edge]} "
                        f"share vertex {v} and color {color}"
                    )
                seen[(v, color)] = edge
        return True, None

    @classmethod
    def verify_witness(
        cls,
        coloring: EdgeColoring,
        graph: Graph,
        l: int,
        p: int
    ) -> Tuple[bool, Optional[str]]:
        """Proper, at least `l` colored edges, at most `p` colors."""
        ok, error = cls.verify_coloring(coloring, graph)
        if not ok:
            return ok, error
        if coloring.size < l:
            return False, f"Witness colors {coloring.size} edges, fewer than l={l}"
        if coloring.colors_used() > p:
            return False, f"Witness uses {coloring.colors_used()} colors, more than p={p}"
        return True, None


class CapValidator:
    """Up-front checks of configured caps."""

    @classmethod
    def require_at_most(cls, value: int, cap: int, what: str) -> None:
        """
        Raises:
            InstanceTooLargeError: If `value` exceeds `cap`.
        """
        if value > cap:
            raise InstanceTooLargeError(f"{what} is {value}, above the configured cap {cap}")


def verify_coloring(coloring: EdgeColoring, graph: Graph) -> bool:
    """Boolean form of `ColoringValidator.verify_coloring`."""
    return ColoringValidator.verify_coloring(coloring, graph)[0]
