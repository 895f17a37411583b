"""
Engine dispatch, corpus cross-validation and the benchmark harness.
"""

import logging
import time
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import pandas as pd

from app.fpt import DivideColorService, RainbowService
from app.gadgets import ReductionService
from app.ilp import IlpService
from app.kernel import KernelService
from app.mecs.formats import read_graph
from app.mecs.models import (
    BenchRecord,
    CrossValidationReport,
    Engine,
    Graph,
    MecsInstance,
    MecsSolution,
    RbdsInstance,
    RunConfig,
    Verdict,
)
from app.mecs.validation import BudgetExceededError, InstanceTooLargeError
from app.oracle import OracleService

logger = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "instance_id", "engine", "verdict", "optimum", "l", "p",
    "wall_ms", "witness_size", "seed", "kernel_vertices", "modulator_size",
]
EXACT_ENGINES = (Engine.ILP, Engine.RAINBOW)
GENERATORS = ("random", "stars", "cycles", "gadget")


class EngineRunner:
    """Runs one engine under the caps of a `RunConfig`; caps hit become BUDGET."""

    def __init__(self, run: RunConfig):
        """
        Initializes the `EngineRunner`.

        Args:
            run: Caps, seed and budget for every engine call.
        """
        self.run = run

    def _dispatch(self, inst: MecsInstance, engine: Engine) -> MecsSolution:
        run = self.run
        if engine == Engine.ORACLE:
            return OracleService(run.edge_cap, run.budget_ms).solve_exact(inst)
        if engine == Engine.ILP:
            return IlpService(vc_cap=run.vc_cap, budget_ms=run.budget_ms, dump_lp=run.dump_lp).solve_via_ilp(inst)
        if engine == Engine.RAINBOW:
            return RainbowService(run.rainbow_k_cap, run.budget_ms).solve_via_rainbow(inst)

        service = DivideColorService(rounds_factor=run.rounds_factor, l_cap=run.l_cap, budget_ms=run.budget_ms)
        solutions = []
        for seed in range(run.seed, run.seed + run.repeat):
            solution = service.divide_and_color(inst, seed)
            if solution.is_yes:
                return solution
            solutions.append(solution)
        # a completed NO outranks a run cut short by the work budget
        completed = [s for s in solutions if s.verdict == Verdict.NO]
        return completed[-1] if completed else solutions[-1]

    def solve(self, inst: MecsInstance, engine: Optional[Engine] = None) -> MecsSolution:
        engine = engine or self.run.engine
        try:
            return self._dispatch(inst, engine)
        except (InstanceTooLargeError, BudgetExceededError) as exc:
            logger.warning("%s: %s", engine.value, exc)
            return MecsSolution(verdict=Verdict.BUDGET, engine=engine.value, details={"error": str(exc)})


def load_corpus(corpus_dir: str) -> List[Tuple[str, MecsInstance]]:
    """Instances listed in `<corpus_dir>/manifest.csv` (instance_id,path,l,p)."""
    manifest = Path(corpus_dir) / "manifest.csv"
    if not manifest.exists():
        return []
    frame = pd.read_csv(manifest)
    instances = []
    for row in frame.itertuples(index=False):
        graph = read_graph(Path(corpus_dir) / row.path)
        instances.append((str(row.instance_id), MecsInstance(graph=graph, l=int(row.l), p=int(row.p))))
    return instances


def _record(instance_id: str, inst: MecsInstance, solution: MecsSolution, seed: int, wall_ms: Optional[float]) -> BenchRecord:
    return BenchRecord(
        instance_id=instance_id,
        engine=solution.engine or "",
        verdict=solution.verdict,
        optimum=solution.optimum,
        l=inst.l,
        p=inst.p,
        wall_ms=wall_ms,
        witness_size=solution.witness.size if solution.witness else 0,
        seed=seed,
    )


def cross_validate(corpus_dir: str, run: RunConfig) -> CrossValidationReport:
    """
    Runs every engine and kernelize-then-oracle on each corpus instance and
    compares with the oracle. Instances the oracle cannot solve are skipped.
    """
    runner = EngineRunner(run)
    report = CrossValidationReport()
    for instance_id, inst in load_corpus(corpus_dir):
        reference = runner.solve(inst, Engine.ORACLE)
        report.records.append(_record(instance_id, inst, reference, run.seed, None))
        if reference.verdict == Verdict.BUDGET:
            logger.warning("cross-validate: oracle skipped %s", instance_id)
            continue

        for engine in EXACT_ENGINES + (Engine.DIVIDE_COLOR,):
            solution = runner.solve(inst, engine)
            report.records.append(_record(instance_id, inst, solution, run.seed, None))
            if solution.verdict == Verdict.BUDGET or solution.verdict == reference.verdict:
                continue
            if engine == Engine.DIVIDE_COLOR and solution.verdict == Verdict.NO:
                report.one_sided_misses += 1
                continue
            report.disagreements.append(
                f"{instance_id}: {engine.value} says {solution.verdict.value}, oracle {reference.verdict.value}"
            )

        trace = KernelService().kernelize(inst)
        kernel_verdict = runner.solve(trace.final, Engine.ORACLE).verdict
        if kernel_verdict != Verdict.BUDGET and kernel_verdict != reference.verdict:
            report.kernel_mismatches += 1
            report.disagreements.append(
                f"{instance_id}: kernel says {kernel_verdict.value}, oracle {reference.verdict.value}"
            )
        if not trace.vacuous and trace.size_units > (inst.p + 1) * len(trace.modulator):
            report.disagreements.append(f"{instance_id}: kernel size {trace.size_units} above (p+1)|X|")

    logger.info(
        "cross-validate: %d records, %d disagreements, %d one-sided misses",
        len(report.records), len(report.disagreements), report.one_sided_misses
    )
    return report


def _from_networkx(nxg: nx.Graph) -> Graph:
    return Graph(n=nxg.number_of_nodes(), edges=sorted(tuple(sorted(e)) for e in nxg.edges()))


def _rbds_ring(size: int) -> RbdsInstance:
    """Red i dominates blue i and i+1 (mod size); k = ⌈size/2⌉."""
    edges = sorted({(i, i) for i in range(size)} | {(i, (i + 1) % size) for i in range(size)})
    return RbdsInstance(n_red=size, n_blue=size, edges=edges, k=(size + 1) // 2)


def generate(generator: str, sizes: Iterable[int], p: int, seed: int) -> List[Tuple[str, MecsInstance]]:
    """
    Bench instances. random: G(n, m) with m = min(n(n-1)/2, ⌊3n/2⌋); stars:
    K_{1,n}; cycles: C_n; gadget: reduction of an RBDS ring of n red and n
    blue vertices. Except for gadgets, l is the oracle's upper bound.
    """
    if generator not in GENERATORS:
        raise ValueError(f"Unknown generator {generator!r}; expected one of {GENERATORS}")
    instances = []
    for n in sizes:
        if generator == "gadget":
            layout = ReductionService().reduce_rbds(_rbds_ring(n))
            instances.append((f"gadget-{n}", layout.mecs))
            continue
        if generator == "random":
            m = min(n * (n - 1) // 2, (3 * n) // 2)
            g = _from_networkx(nx.gnm_random_graph(n, m, seed=seed + n))
        elif generator == "stars":
            g = _from_networkx(nx.star_graph(n))
        else:
            g = _from_networkx(nx.cycle_graph(n))
        instances.append((f"{generator}-{n}", MecsInstance(graph=g, l=OracleService.upper_bound(g, p), p=p)))
    return instances


def bench(
    instances: Sequence[Tuple[str, MecsInstance]],
    engines: Sequence[Engine],
    run: RunConfig,
    deterministic: bool = False
) -> pd.DataFrame:
    """
    One row per (instance, engine) in input order, columns as `BENCH_COLUMNS`.
    With `deterministic`, wall time is left empty.
    """
    runner = EngineRunner(run)
    records = []
    for instance_id, inst in instances:
        trace = KernelService().kernelize(inst)
        for engine in engines:
            started = time.perf_counter()
            solution = runner.solve(inst, engine)
            wall_ms = None if deterministic else round((time.perf_counter() - started) * 1000.0, 3)
            record = _record(instance_id, inst, solution, run.seed, wall_ms)
            record.kernel_vertices = trace.final.graph.n
            record.modulator_size = len(trace.modulator)
            records.append(record.model_dump(mode="json"))
        logger.debug("bench: %s done", instance_id)
    return pd.DataFrame(records, columns=BENCH_COLUMNS)
