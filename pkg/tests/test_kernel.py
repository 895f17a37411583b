"""
Tests for the expansion lemma, the reduction rules and the kernelizer.
"""

import pytest

from app.kernel import (
    KernelService,
    find_expansion,
    residual_components,
    rule1_drop_isolated_components,
    rule2_expansion_delete,
    trivial_no_instance,
    vacuous_instance,
)
from app.mecs.models import Graph, MecsInstance, RuleId, Verdict
from app.oracle import OracleService


# ===== Fixtures =====

@pytest.fixture
def spiders():
    """Modulator {0, 1}; each has two private K2 components."""
    return Graph(n=10, edges=[(0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)])


class TestFindExpansion:
    """Test find_expansion."""

    def test_star(self):
        result = find_expansion([0], {0: [0], 1: [0], 2: [0]}, 3)
        assert result.x_prime == [0]
        assert result.c_prime == [0, 1, 2]
        assert result.expansion_edges == [(0, 0), (0, 1), (0, 2)]

    def test_private_components(self):
        result = find_expansion([0, 1], {0: [0], 1: [0], 2: [1], 3: [1]}, 2)
        assert result.x_prime == [0, 1]
        assert result.c_prime == [0, 1, 2, 3]

    def test_hall_violator_is_removed(self):
        """x1 reaches a single component, so only x0 survives."""
        result = find_expansion([0, 1], {0: [0], 1: [0], 2: [0], 3: [1]}, 2)
        assert result.x_prime == [0]
        assert len(result.c_prime) == 2
        assert set(result.c_prime) <= {0, 1, 2}

    def test_too_few_components(self):
        assert find_expansion([0], {0: [0]}, 2) is None
        assert find_expansion([], {0: [0]}, 1) is None

    def test_shared_components(self):
        """Components adjacent to both sides still give each x private partners."""
        neighbors = {0: [0, 1], 1: [0, 1], 2: [0, 1], 3: [0, 1]}
        result = find_expansion([0, 1], neighbors, 2)
        assert result.x_prime == [0, 1]
        assert sorted(c for _, c in result.expansion_edges) == [0, 1, 2, 3]


class TestReductionRules:
    """Test RR1 and RR2 on hand-built instances."""

    def test_residual_components(self, two_triangles):
        assert residual_components(two_triangles, [0, 3]) == [[1, 2], [4, 5]]

    def test_rule1_drops_unattached_edge(self):
        g = Graph(n=5, edges=[(0, 1), (0, 2), (1, 2), (3, 4)])
        reduced, step = rule1_drop_isolated_components(MecsInstance(graph=g, l=4, p=2), [0])
        assert step.rule == RuleId.RR1
        assert step.deleted == [3, 4]
        assert step.l_decrease == 1
        assert reduced.l == 3
        assert reduced.graph.m == 3

    def test_rule1_isolated_vertex_keeps_l(self):
        g = Graph(n=4, edges=[(0, 1), (0, 2)])
        reduced, step = rule1_drop_isolated_components(MecsInstance(graph=g, l=2, p=2), [0])
        assert step.deleted == [3]
        assert step.l_decrease == 0
        assert reduced.l == 2

    def test_rule1_inapplicable(self, star5):
        assert rule1_drop_isolated_components(MecsInstance(graph=star5, l=3, p=2), [0]) is None

    def test_rule2_on_star(self, star5):
        reduced, step = rule2_expansion_delete(MecsInstance(graph=star5, l=5, p=2), [0])
        assert step.rule == RuleId.RR2
        assert step.l_decrease == 2
        assert step.modulator_removed == [0]
        assert len(step.deleted) == 3
        assert 0 in step.deleted
        assert reduced.l == 3
        assert reduced.graph.n == 3
        assert reduced.graph.m == 0

    def test_rule2_counts_component_edges(self, spiders):
        reduced, step = rule2_expansion_delete(MecsInstance(graph=spiders, l=10, p=2), [0, 1])
        assert step.l_decrease == 2 * 2 + 4
        assert reduced.l == 2
        assert reduced.graph.n == 0

    def test_rule2_threshold(self, star5):
        assert rule2_expansion_delete(MecsInstance(graph=star5, l=5, p=6), [0]) is None
        assert rule2_expansion_delete(MecsInstance(graph=star5, l=5, p=2), []) is None

    def test_rule2_needs_two_colors(self):
        """On the path x-a-b one color cannot cover both edges."""
        g = Graph(n=3, edges=[(0, 1), (1, 2)])
        assert rule2_expansion_delete(MecsInstance(graph=g, l=2, p=1), [0]) is None


class TestKernelService:
    """Test KernelService.kernelize."""

    def test_star_trace(self, star5):
        """RR2 removes the center and two leaves, RR1 clears the rest."""
        trace = KernelService().kernelize(MecsInstance(graph=star5, l=5, p=2))
        assert trace.modulator == [0]
        assert [step.rule for step in trace.steps] == [RuleId.RR2, RuleId.RR1, RuleId.RR1, RuleId.RR1]
        assert trace.total_decrease == 2
        assert trace.final.l == 3
        assert trace.final.graph.n == 0
        assert trace.vertex_map == []
        assert not trace.vacuous

        deleted = [v for step in trace.steps for v in step.deleted]
        assert sorted(deleted) == list(range(6))

    def test_reaching_zero_gives_vacuous_instance(self, star5):
        trace = KernelService().kernelize(MecsInstance(graph=star5, l=3, p=3))
        assert trace.vacuous
        assert not trace.early_yes
        assert trace.final == vacuous_instance()

    def test_precheck_yes(self, k4):
        trace = KernelService().kernelize(MecsInstance(graph=k4, l=2, p=1))
        assert trace.early_yes
        assert trace.vacuous
        assert trace.steps == []

    def test_matching_graph_is_early_yes(self):
        g = Graph(n=6, edges=[(0, 1), (2, 3), (4, 5)])
        assert KernelService().kernelize(MecsInstance(graph=g, l=3, p=4)).early_yes

    def test_single_color_is_decided(self):
        g = Graph(n=3, edges=[(0, 1), (1, 2)])
        trace = KernelService().kernelize(MecsInstance(graph=g, l=2, p=1))
        assert trace.decided_no
        assert trace.final == trivial_no_instance()

    def test_irreducible_instance(self, two_triangles):
        """Two components against a modulator of size two stay below p·|X|."""
        trace = KernelService().kernelize(MecsInstance(graph=two_triangles, l=6, p=2))
        assert trace.modulator == [0, 3]
        assert trace.steps == []
        assert trace.final.graph == two_triangles
        assert trace.vertex_map == list(range(6))
        assert trace.size_units == 4
        assert trace.matching_size == 3
        assert trace.vc_upper == 6

    def test_supplied_modulator(self, star5):
        trace = KernelService(modulator=[0]).kernelize(MecsInstance(graph=star5, l=5, p=2))
        assert trace.modulator == [0]
        with pytest.raises(ValueError, match="deg-1-modulator"):
            KernelService(modulator=[1]).kernelize(MecsInstance(graph=star5, l=5, p=2))

    def test_trace_invariants_and_equivalence(self, fuzz_graphs):
        """The kernel has the same answer as the input and respects its size bound."""
        oracle = OracleService(edge_cap=24)
        for g in fuzz_graphs:
            for p in (1, 2, 3):
                optimum = oracle.max_colorable(g, p)[0]
                for l in range(1, g.m + 2):
                    trace = KernelService().kernelize(MecsInstance(graph=g, l=l, p=p))
                    expected = Verdict.YES if optimum >= l else Verdict.NO
                    assert oracle.solve_exact(trace.final).verdict == expected

                    deleted = [v for step in trace.steps for v in step.deleted]
                    assert len(deleted) == len(set(deleted))
                    if not (trace.vacuous or trace.decided_no):
                        assert trace.total_decrease == l - trace.final.l
                        assert trace.size_units <= (p + 1) * len(trace.modulator)
                        assert len(trace.vertex_map) == trace.final.graph.n
