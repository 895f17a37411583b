"""
Unit tests for the coloring and cap validators.
"""

import pytest

from app.mecs.models import EdgeColoring
from app.mecs.validation import (
    CapValidator,
    ColoringValidator,
    GraphFormatError,
    InstanceTooLargeError,
    MecsError,
    verify_coloring,
)


class TestColoringValidator:
    """Test ColoringValidator."""

    def test_proper_partial_coloring(self, triangle):
        """Two triangle edges with distinct colors form a proper coloring."""
        coloring = EdgeColoring(assignment={0: 1, 1: 2}, p=2)
        ok, error = ColoringValidator.verify_coloring(coloring, triangle)
        assert ok
        assert error is None

    def test_conflict_names_shared_vertex(self, triangle):
        coloring = EdgeColoring(assignment={0: 1, 1: 1}, p=2)
        ok, error = ColoringValidator.verify_coloring(coloring, triangle)
        assert not ok
        assert "share vertex 0" in error

    def test_unknown_edge(self, triangle):
        coloring = EdgeColoring(assignment={7: 1}, p=1)
        ok, error = ColoringValidator.verify_coloring(coloring, triangle)
        assert not ok
        assert "does not exist" in error

    def test_witness_size_and_palette(self, k4):
        """Witness checks count colored edges and distinct colors."""
        perfect = EdgeColoring(assignment={0: 1, 5: 1}, p=1)
        assert ColoringValidator.verify_witness(perfect, k4, l=2, p=1)[0]
        ok, error = ColoringValidator.verify_witness(perfect, k4, l=3, p=1)
        assert not ok
        assert "fewer than l=3" in error

        two_colors = EdgeColoring(assignment={0: 1, 1: 2}, p=2)
        ok, error = ColoringValidator.verify_witness(two_colors, k4, l=1, p=1)
        assert not ok
        assert "more than p=1" in error

    def test_boolean_form(self, path3):
        assert verify_coloring(EdgeColoring(assignment={0: 1, 1: 2}, p=2), path3)
        assert not verify_coloring(EdgeColoring(assignment={0: 1, 1: 1}, p=2), path3)


class TestErrors:
    """Test the error hierarchy."""

    def test_cap_validator(self):
        CapValidator.require_at_most(4, 4, "vertex cover")
        with pytest.raises(InstanceTooLargeError, match="vertex cover is 5"):
            CapValidator.require_at_most(5, 4, "vertex cover")

    def test_format_error_prefix(self):
        error = GraphFormatError("self-loop 1 1", 3)
        assert str(error) == "line 3: self-loop 1 1"
        assert error.line_no == 3
        assert isinstance(error, MecsError)
        assert str(GraphFormatError("bad")) == "bad"
