"""
Integration tests: every engine and the kernel against the exhaustive oracle
on seeded random graphs.
"""

import random

import pytest

from app.bench import EngineRunner
from app.gadgets import RbdsSolver, ReductionService
from app.kernel import KernelService
from app.mecs.core import is_colorable, min_vertex_cover
from app.mecs.models import Engine, MecsInstance, RbdsInstance, Verdict
from app.mecs.validation import ColoringValidator
from app.oracle import OracleService
from tests.conftest import fuzz_graph_set, random_rbds, split_witness


def _instances(graphs, p_values):
    """For each graph and p, the oracle optimum and one above it as targets."""
    oracle = OracleService()
    for g in graphs:
        for p in p_values:
            optimum = oracle.max_colorable(g, p)[0]
            for l in (optimum, optimum + 1):
                if l >= 1:
                    yield MecsInstance(graph=g, l=l, p=p), optimum >= l


def _check_engine(runner, inst, expected_yes, engine, allow_budget=True):
    solution = runner.solve(inst, engine)
    if solution.verdict == Verdict.BUDGET:
        assert allow_budget, f"{engine.value} hit a cap on {inst}"
        return
    if engine == Engine.DIVIDE_COLOR and not expected_yes:
        assert solution.verdict == Verdict.NO
        return
    if engine == Engine.DIVIDE_COLOR and solution.verdict == Verdict.NO:
        return
    assert solution.is_yes == expected_yes, f"{engine.value} on {inst}"
    if solution.is_yes:
        ok, error = ColoringValidator.verify_witness(solution.witness, inst.graph, inst.l, inst.p)
        assert ok, error


def _check_kernel(inst, expected_yes, oracle):
    trace = KernelService().kernelize(inst)
    assert oracle.solve_exact(trace.final).is_yes == expected_yes, f"kernel of {inst}"
    assert inst.l - trace.total_decrease == trace.final.l or trace.vacuous or trace.decided_no
    if not (trace.vacuous or trace.decided_no):
        assert trace.size_units <= (inst.p + 1) * len(trace.modulator)
        assert trace.final.graph.n <= (2 * inst.p + 1) * len(trace.modulator)


@pytest.mark.integration
class TestEnginesAgree:
    """Exact engines match the oracle; divide-and-color never answers YES wrongly."""

    def test_fuzz(self, fuzz_graphs, run_config):
        runner = EngineRunner(run_config.model_copy(update={"l_cap": 6}))
        for inst, expected_yes in _instances(fuzz_graphs[:15], (1, 2, 3)):
            for engine in (Engine.ILP, Engine.DIVIDE_COLOR):
                _check_engine(runner, inst, expected_yes, engine)
            if inst.graph.m <= 6:
                _check_engine(runner, inst, expected_yes, Engine.RAINBOW)

    @pytest.mark.slow
    def test_every_target(self, run_config):
        """500 graphs with n <= 7 and m <= 12, p in 1..3, every l in 0..m."""
        oracle = OracleService()
        runner = EngineRunner(run_config.model_copy(update={"vc_cap": 3}))
        for g in fuzz_graph_set(500, seed=99, max_m=12):
            small_cover = len(min_vertex_cover(g)) <= 3
            for p in (1, 2, 3):
                optimum = oracle.max_colorable(g, p)[0]
                for l in range(g.m + 1):
                    inst = MecsInstance(graph=g, l=l, p=p)
                    expected_yes = l <= optimum
                    if small_cover:
                        _check_engine(runner, inst, expected_yes, Engine.ILP, allow_budget=False)
                    if l <= 8:
                        _check_engine(runner, inst, expected_yes, Engine.RAINBOW, allow_budget=False)
                    _check_kernel(inst, expected_yes, oracle)

    @pytest.mark.slow
    def test_divide_color_sweep(self, run_config):
        runner = EngineRunner(run_config)
        for inst, expected_yes in _instances(fuzz_graph_set(60, seed=99, max_n=8, max_m=12), (1, 2, 3)):
            _check_engine(runner, inst, expected_yes, Engine.DIVIDE_COLOR)


@pytest.mark.integration
class TestKernelPreservesAnswer:
    """The kernel is YES iff the input is, and stays within its size bound."""

    def test_fuzz(self, fuzz_graphs):
        oracle = OracleService()
        for inst, expected_yes in _instances(fuzz_graphs, (1, 2, 3)):
            _check_kernel(inst, expected_yes, oracle)


@pytest.mark.integration
class TestReductionEndToEnd:
    """Gadget instances from small RBDS inputs keep their structural guarantees."""

    @pytest.mark.parametrize("edges,k", [
        ([(0, 0)], 1),
        ([(0, 0), (1, 0), (1, 1)], 1),
        ([(0, 0), (0, 1), (1, 1), (1, 2)], 2),
    ])
    def test_layouts(self, edges, k):
        n_red = 1 + max(r for r, _ in edges)
        n_blue = 1 + max(b for _, b in edges)
        rbds = RbdsInstance(n_red=n_red, n_blue=n_blue, edges=edges, k=k)
        service = ReductionService()
        layout = service.reduce_rbds(rbds)
        g = layout.mecs.graph
        assert g.m == 35 * len(edges) + 22 * n_red + 2 * n_blue
        assert layout.mecs.l == g.m - k
        assert max(g.degree(v) for v in range(g.n)) <= 3

        chosen = RbdsSolver().solve(rbds)
        assert chosen is not None
        modified = service.modify_at(layout, chosen)
        assert modified.n == g.n + len(chosen)
        assert all(modified.degree(r) == 1 for r in chosen)

    @pytest.mark.slow
    def test_verdicts_agree(self):
        """
        Seeded RBDS inputs: k = 0 is NO on both sides, and at the domination
        number both sides are YES with a checked MECS witness.
        """
        rng = random.Random(5)
        service = ReductionService()
        solver = RbdsSolver()
        for _ in range(4):
            source = random_rbds(rng, 2, 2, 2)
            best = solver.minimum_dominating_set(source)
            for k in (0, len(best)):
                rbds = RbdsInstance(n_red=source.n_red, n_blue=source.n_blue, edges=source.edges, k=k)
                layout = service.reduce_rbds(rbds)
                g = layout.mecs.graph
                chosen = solver.solve(rbds)
                if chosen is None:
                    assert k == 0
                    assert not is_colorable(g, 3)
                else:
                    witness = split_witness(service, layout, chosen)
                    ok, error = ColoringValidator.verify_witness(witness, g, layout.mecs.l, 3)
                    assert ok, error
