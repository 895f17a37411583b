"""
Tests for the module, the red/blue gadgets, the RBDS reduction and the
claim verifier.
"""

import pytest

from app.gadgets import (
    ClaimVerifier,
    RbdsSolver,
    ReductionService,
    build_blue_gadget,
    build_module,
    build_red_gadget,
    module_state_ok,
)
from app.mecs.core import is_colorable
from app.mecs.models import RbdsInstance
from app.mecs.validation import ClaimEnumerationError, ColoringValidator
from tests.conftest import split_witness


class TestModule:
    """Test the inverting module."""

    def test_shape(self):
        fragment = build_module()
        assert fragment.graph.n == 12
        assert fragment.graph.m == 13
        assert sorted(fragment.ports) == ["a", "b", "c", "d", "e"]
        assert len(fragment.modules) == 1 and len(fragment.modules[0]) == 7

    def test_module_vertices_have_degree_three(self):
        fragment = build_module()
        for v in fragment.modules[0]:
            assert fragment.graph.degree(v) == 3

    @pytest.mark.parametrize("colors,expected", [
        ({"a": 1, "b": 1, "c": 2, "d": 3, "e": 1}, True),
        ({"a": 1, "b": 2, "c": 3, "d": 3, "e": 3}, True),
        ({"a": 1, "b": 1, "c": 2, "d": 2, "e": 3}, False),
        ({"a": 1, "b": 2, "c": 3, "d": 1, "e": 3}, False),
        ({"a": 1, "b": 1, "c": 2, "d": 3, "e": 2}, False),
    ])
    def test_module_state_ok(self, colors, expected):
        assert module_state_ok(colors) is expected


class TestGadgets:
    """Test the stand-alone red and blue gadgets."""

    def test_red_gadget_degree_one(self):
        fragment = build_red_gadget(1)
        assert fragment.graph.m == 44
        assert fragment.graph.n == 31
        assert len(fragment.pairs) == 1
        assert fragment.root_pair is not None
        assert len(fragment.modules) == 4
        for e in fragment.root_pair:
            assert 0 in fragment.graph.edges[e]

    def test_red_gadget_pairs_grow_with_degree(self):
        assert len(build_red_gadget(3).pairs) == 3

    def test_modified_red_gadget_splits_root(self):
        plain = build_red_gadget(1)
        modified = build_red_gadget(1, modified=True)
        assert modified.graph.n == plain.graph.n + 1
        assert modified.graph.m == plain.graph.m
        first, second = modified.root_pair
        assert 0 in modified.graph.edges[first]
        assert 0 not in modified.graph.edges[second]

    def test_blue_gadget_degree_one(self):
        fragment = build_blue_gadget(1)
        assert fragment.graph.m == 17
        assert fragment.graph.n == 14
        assert len(fragment.pairs) == 1
        assert 0 in fragment.graph.edges[fragment.ports["pendant"]]

    @pytest.mark.parametrize("builder", [build_red_gadget, build_blue_gadget])
    def test_degree_zero_rejected(self, builder):
        with pytest.raises(ValueError, match="at least 1"):
            builder(0)


class TestReductionService:
    """Test ReductionService."""

    def test_single_edge(self, single_edge_rbds):
        layout = ReductionService().reduce_rbds(single_edge_rbds)
        assert layout.mecs.graph.m == 59
        assert layout.mecs.graph.n == 41
        assert layout.mecs.l == 58
        assert layout.mecs.p == 3
        assert layout.edge_bound_holds
        assert len(layout.identifications) == 1

    def test_edge_count_formula(self, path_rbds):
        layout = ReductionService().reduce_rbds(path_rbds)
        assert layout.mecs.graph.m == 35 * 3 + 22 * 2 + 2 * 2
        assert layout.mecs.l == layout.mecs.graph.m - 1
        assert layout.edge_bound_holds

    def test_identified_pairs_shared(self, path_rbds):
        layout = ReductionService().reduce_rbds(path_rbds)
        for ident in layout.identifications:
            assert ident.edges in layout.red[ident.red].output_pairs
            assert ident.edges in layout.blue[ident.blue].input_pairs
        assert layout.blue[0].vertex == 2
        assert len(layout.blue[0].input_pairs) == 2

    def test_max_degree_three(self, path_rbds):
        layout = ReductionService().reduce_rbds(path_rbds)
        g = layout.mecs.graph
        assert max(g.degree(v) for v in range(g.n)) <= 3

    def test_modify_at(self, single_edge_rbds):
        service = ReductionService()
        layout = service.reduce_rbds(single_edge_rbds)
        modified = service.modify_at(layout, [0])
        assert modified.n == layout.mecs.graph.n + 1
        assert modified.m == layout.mecs.graph.m
        assert modified.degree(0) == 1

    def test_modify_at_rejects_non_red(self, single_edge_rbds):
        service = ReductionService()
        layout = service.reduce_rbds(single_edge_rbds)
        with pytest.raises(ValueError, match="not a red vertex"):
            service.modify_at(layout, [1])

    @pytest.mark.slow
    def test_dominating_set_split_is_colorable(self, single_edge_rbds):
        service = ReductionService()
        layout = service.reduce_rbds(single_edge_rbds)
        assert is_colorable(service.modify_at(layout, [0]), 3)

    @pytest.mark.slow
    def test_unsplit_graph_is_not_colorable(self):
        """With k = 0 nothing dominates the blue vertex, so all of G' cannot be 3-colored."""
        rbds = RbdsInstance(n_red=1, n_blue=1, edges=[(0, 0)], k=0)
        layout = ReductionService().reduce_rbds(rbds)
        assert RbdsSolver().solve(rbds) is None
        assert layout.mecs.l == layout.mecs.graph.m
        assert not is_colorable(layout.mecs.graph, 3)

    @pytest.mark.slow
    def test_dominating_set_gives_witness(self, single_edge_rbds):
        service = ReductionService()
        layout = service.reduce_rbds(single_edge_rbds)
        witness = split_witness(service, layout, [0])
        ok, error = ColoringValidator.verify_witness(witness, layout.mecs.graph, layout.mecs.l, 3)
        assert ok, error
        assert witness.size == layout.mecs.graph.m - 1


class TestRbdsSolver:
    """Test RbdsSolver."""

    def test_path(self, path_rbds):
        assert RbdsSolver().solve(path_rbds) == [1]

    def test_budget_too_small(self, path_rbds):
        inst = RbdsInstance(n_red=2, n_blue=2, edges=path_rbds.edges, k=0)
        assert RbdsSolver().solve(inst) is None

    def test_needs_every_red(self):
        inst = RbdsInstance(n_red=2, n_blue=2, edges=[(0, 0), (1, 1)], k=1)
        assert RbdsSolver().minimum_dominating_set(inst) == [0, 1]
        assert RbdsSolver().solve(inst) is None


class TestClaimVerifier:
    """Test ClaimVerifier."""

    def test_module_states(self):
        report = ClaimVerifier().module_states()
        assert report.passed
        assert report.examined > 0

    def test_module_extension(self):
        report = ClaimVerifier().module_extension()
        assert report.passed
        assert report.examined == 36

    def test_blue_degree_one(self):
        verifier = ClaimVerifier()
        needs = verifier.blue_needs_equal_pair(1)
        extends = verifier.blue_extension(1)
        assert needs.passed and needs.examined == 6
        assert extends.passed and extends.examined == 3

    def test_edge_cap(self):
        with pytest.raises(ClaimEnumerationError, match="above the cap 10"):
            ClaimVerifier(edge_cap=10).module_states()

    @pytest.mark.slow
    def test_red_outputs_distinct(self):
        assert ClaimVerifier().red_outputs_distinct(1).passed

    @pytest.mark.slow
    def test_modified_red_outputs_equal(self):
        assert ClaimVerifier().modified_red_outputs_equal(1).passed

    @pytest.mark.slow
    def test_blue_degree_two(self):
        verifier = ClaimVerifier()
        assert verifier.blue_needs_equal_pair(2).passed
        assert verifier.blue_extension(2).passed

    @pytest.mark.slow
    def test_verify_claims(self):
        reports = ClaimVerifier().verify_claims()
        assert len(reports) == 8
        assert all(report.passed for report in reports)
        assert reports[-1].claim == "blue-extension (d=2)"
