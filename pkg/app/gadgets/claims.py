"""
This module provides the `ClaimVerifier` class, which checks the coloring
properties the reduction relies on by exhaustive 3-edge-coloring search.
"""

import logging
from itertools import product
from typing import Dict, List, Optional

from app import config
from app.mecs.core import find_coloring, iter_colorings
from app.mecs.models import ClaimReport, GadgetFragment
from app.mecs.validation import ClaimEnumerationError

from .gadget_builder import build_blue_gadget, build_red_gadget
from .module import PORT_NAMES, build_module

logger = logging.getLogger(__name__)

COLORS = (1, 2, 3)


def module_state_ok(colors: Dict[str, int]) -> bool:
    """Exactly one of a = b, c = d holds, and the other three ports differ pairwise."""
    a, b, c, d, e = (colors[name] for name in PORT_NAMES)
    if a == b:
        return c != d and len({c, d, e}) == 3
    return c == d and len({a, b, e}) == 3


class ClaimVerifier:
    """
    Runs the six gadget checks.

    Each check works on a closed fragment (hanging edges on private stubs)
    and refuses fragments with more edges than the cap.
    """

    def __init__(self, edge_cap: Optional[int] = None):
        """
        Initializes the `ClaimVerifier`.

        Args:
            edge_cap: Largest fragment accepted; defaults to
                `config.GADGET_EDGE_CAP`.
        """
        self.edge_cap = config.GADGET_EDGE_CAP if edge_cap is None else edge_cap

    def _check_size(self, fragment: GadgetFragment, what: str) -> None:
        if fragment.graph.m > self.edge_cap:
            raise ClaimEnumerationError(f"{what} has {fragment.graph.m} edges, above the cap {self.edge_cap}")

    def _extends(self, fragment: GadgetFragment, fixed: Dict[int, int]) -> bool:
        return find_coloring(fragment.graph, 3, fixed=fixed) is not None

    def module_states(self) -> ClaimReport:
        """Every 3-edge-coloring of a module is in one of the two port states."""
        fragment = build_module()
        self._check_size(fragment, "module")
        examined = 0
        for coloring in iter_colorings(fragment.graph, 3):
            examined += 1
            ports = {name: coloring[edge] for name, edge in fragment.ports.items()}
            if not module_state_ok(ports):
                return ClaimReport(claim="module-states", passed=False, examined=examined, detail=f"ports {ports}")
        return ClaimReport(claim="module-states", passed=examined > 0, examined=examined)

    def module_extension(self) -> ClaimReport:
        """Every port coloring in one of the two states extends to the module."""
        fragment = build_module()
        self._check_size(fragment, "module")
        examined = 0
        for values in product(COLORS, repeat=len(PORT_NAMES)):
            ports = dict(zip(PORT_NAMES, values))
            if not module_state_ok(ports):
                continue
            examined += 1
            fixed = {fragment.ports[name]: color for name, color in ports.items()}
            if not self._extends(fragment, fixed):
                return ClaimReport(claim="module-extension", passed=False, examined=examined, detail=f"ports {ports}")
        return ClaimReport(claim="module-extension", passed=True, examined=examined)

    def red_outputs_distinct(self, d: int = 1) -> ClaimReport:
        """The red gadget is 3-colorable and no coloring gives an output pair one color."""
        fragment = build_red_gadget(d)
        self._check_size(fragment, "red gadget")
        examined = 1
        if not self._extends(fragment, {}):
            return ClaimReport(claim="red-outputs-distinct", passed=False, examined=examined, detail="not 3-colorable")
        for first, second in fragment.pairs:
            for color in COLORS:
                examined += 1
                if self._extends(fragment, {first: color, second: color}):
                    return ClaimReport(
                        claim="red-outputs-distinct", passed=False, examined=examined,
                        detail=f"pair ({first}, {second}) colored {color}",
                    )
        return ClaimReport(claim="red-outputs-distinct", passed=True, examined=examined)

    def modified_red_outputs_equal(self, d: int = 1) -> ClaimReport:
        """Some coloring of the modified red gadget gives every output pair one color."""
        fragment = build_red_gadget(d, modified=True)
        self._check_size(fragment, "modified red gadget")
        examined = 0
        for colors in product(COLORS, repeat=len(fragment.pairs)):
            examined += 1
            fixed = {}
            for (first, second), color in zip(fragment.pairs, colors):
                fixed[first] = color
                fixed[second] = color
            if self._extends(fragment, fixed):
                return ClaimReport(claim="modified-red-outputs-equal", passed=True, examined=examined)
        return ClaimReport(claim="modified-red-outputs-equal", passed=False, examined=examined)

    def _input_colorings(self, fragment: GadgetFragment):
        edges = [e for pair in fragment.pairs for e in pair]
        for values in product(COLORS, repeat=len(edges)):
            fixed = dict(zip(edges, values))
            equal_pair = any(fixed[first] == fixed[second] for first, second in fragment.pairs)
            yield fixed, equal_pair

    def blue_needs_equal_pair(self, d: int = 1) -> ClaimReport:
        """No coloring of the blue gadget has every input pair two-colored."""
        fragment = build_blue_gadget(d)
        self._check_size(fragment, "blue gadget")
        examined = 0
        for fixed, equal_pair in self._input_colorings(fragment):
            if equal_pair:
                continue
            examined += 1
            if self._extends(fragment, fixed):
                return ClaimReport(claim="blue-needs-equal-pair", passed=False, examined=examined, detail=f"inputs {fixed}")
        return ClaimReport(claim="blue-needs-equal-pair", passed=True, examined=examined)

    def blue_extension(self, d: int = 1) -> ClaimReport:
        """Every input coloring with at least one one-colored pair extends."""
        fragment = build_blue_gadget(d)
        self._check_size(fragment, "blue gadget")
        examined = 0
        for fixed, equal_pair in self._input_colorings(fragment):
            if not equal_pair:
                continue
            examined += 1
            if not self._extends(fragment, fixed):
                return ClaimReport(claim="blue-extension", passed=False, examined=examined, detail=f"inputs {fixed}")
        return ClaimReport(claim="blue-extension", passed=True, examined=examined)

    def verify_claims(self, blue_degrees: tuple = (1, 2)) -> List[ClaimReport]:
        """
        All checks at minimum gadget size; the blue checks also run for each
        degree in `blue_degrees`.
        """
        reports = [
            self.module_states(),
            self.module_extension(),
            self.red_outputs_distinct(1),
            self.modified_red_outputs_equal(1),
        ]
        for d in blue_degrees:
            for report in (self.blue_needs_equal_pair(d), self.blue_extension(d)):
                reports.append(report.model_copy(update={"claim": f"{report.claim} (d={d})"}))
        for report in reports:
            log = logger.info if report.passed else logger.warning
            log("claim %s: %s after %d cases", report.claim, "pass" if report.passed else "FAIL", report.examined)
        return reports
