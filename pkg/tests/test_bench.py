"""
Tests for engine dispatch, corpus loading, generators, benchmarking and
cross-validation.
"""

import pandas as pd
import pytest

from app.bench import BENCH_COLUMNS, EngineRunner, bench, cross_validate, generate, load_corpus
from app.mecs.models import Engine, MecsInstance, RunConfig, Verdict


class TestEngineRunner:
    """Test EngineRunner."""

    def test_each_engine_answers(self, k4_instance, run_config):
        runner = EngineRunner(run_config)
        for engine in (Engine.ORACLE, Engine.ILP, Engine.RAINBOW):
            solution = runner.solve(k4_instance, engine)
            assert solution.verdict == Verdict.YES
            assert solution.engine == engine.value

    def test_default_engine_from_config(self, k4_instance):
        solution = EngineRunner(RunConfig(engine=Engine.ILP)).solve(k4_instance)
        assert solution.engine == "ilp"

    def test_edge_cap_becomes_budget(self, k4_instance):
        solution = EngineRunner(RunConfig(edge_cap=2)).solve(k4_instance, Engine.ORACLE)
        assert solution.verdict == Verdict.BUDGET
        assert "Edge count" in solution.details["error"]

    def test_vc_cap_becomes_budget(self, k4_instance):
        solution = EngineRunner(RunConfig(vc_cap=1)).solve(k4_instance, Engine.ILP)
        assert solution.verdict == Verdict.BUDGET

    def test_l_cap_becomes_budget(self, k4_instance):
        solution = EngineRunner(RunConfig(l_cap=4)).solve(k4_instance, Engine.DIVIDE_COLOR)
        assert solution.verdict == Verdict.BUDGET


class TestCorpus:
    """Test load_corpus."""

    def test_bundled_corpus(self, corpus_dir):
        instances = load_corpus(str(corpus_dir))
        assert len(instances) == 20
        instance_id, inst = instances[0]
        assert instance_id == "k3-l2-p2"
        assert inst.graph.m == 3
        assert (inst.l, inst.p) == (2, 2)

    def test_missing_manifest(self, tmp_path):
        assert load_corpus(str(tmp_path)) == []


class TestGenerate:
    """Test generate."""

    def test_stars_use_upper_bound(self):
        instances = generate("stars", [3, 4], p=2, seed=0)
        assert [name for name, _ in instances] == ["stars-3", "stars-4"]
        assert all(inst.l == 2 for _, inst in instances)
        assert instances[1][1].graph.n == 5

    def test_random_is_seeded(self):
        first = generate("random", [6], p=2, seed=3)
        second = generate("random", [6], p=2, seed=3)
        assert first[0][1] == second[0][1]
        assert first[0][1].graph.m == 9

    def test_gadget(self):
        [(name, inst)] = generate("gadget", [2], p=3, seed=0)
        assert name == "gadget-2"
        assert inst.graph.m == 188
        assert inst.p == 3
        assert inst.l == 188 - 1

    def test_unknown_generator(self):
        with pytest.raises(ValueError, match="Unknown generator"):
            generate("bogus", [3], p=2, seed=0)


class TestBench:
    """Test bench."""

    def test_rows_and_columns(self, run_config):
        instances = generate("cycles", [4, 5], p=2, seed=0)
        frame = bench(instances, [Engine.ORACLE, Engine.ILP], run_config, deterministic=True)
        assert isinstance(frame, pd.DataFrame)
        assert list(frame.columns) == BENCH_COLUMNS
        assert len(frame) == 4
        assert list(frame["engine"]) == ["oracle", "ilp", "oracle", "ilp"]
        assert set(frame["verdict"]) == {"YES"}
        assert frame["wall_ms"].isna().all()

    def test_wall_time_recorded(self, run_config):
        instances = [("c4-l3", MecsInstance(graph=generate("cycles", [4], p=2, seed=0)[0][1].graph, l=3, p=2))]
        frame = bench(instances, [Engine.ORACLE], run_config)
        assert frame["wall_ms"].iloc[0] >= 0.0


class TestCrossValidate:
    """Test cross_validate on the bundled corpus."""

    def test_corpus_agrees(self, corpus_dir):
        report = cross_validate(str(corpus_dir), RunConfig(l_cap=6, repeat=2))
        assert report.passed, report.disagreements
        assert report.kernel_mismatches == 0
        assert len(report.records) == 80

    def test_empty_corpus(self, tmp_path):
        report = cross_validate(str(tmp_path), RunConfig())
        assert report.passed
        assert report.records == []
