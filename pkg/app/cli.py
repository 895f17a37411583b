"""
MECS toolkit - Command Line Interface

Exit codes: 0 = YES / valid / success, 1 = NO / invalid / disagreement,
2 = budget exhausted, malformed input or any other error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from app import config
from app.bench import GENERATORS, EngineRunner, bench, cross_validate, generate
from app.fpt import reduce_to_rainbow
from app.gadgets import ClaimVerifier, ReductionService
from app.kernel import KernelService
from app.mecs.formats import (
    format_coloring,
    format_graph,
    format_labeled_graph,
    parse_coloring,
    parse_rbds,
    read_graph,
    read_labeled_graph,
    write_labeled_graph,
)
from app.mecs.models import Engine, MecsInstance, MecsSolution, RunConfig, Verdict
from app.mecs.validation import ColoringValidator, MecsError

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


class MecsCLI:
    """Command handlers; each returns the process exit code."""

    def __init__(self, console: Optional[Console] = None):
        """
        Initializes the `MecsCLI`.

        Args:
            console: Where human summaries go; stderr by default.
        """
        self.console = console or Console(stderr=True)

    def _run_config(self, args: argparse.Namespace) -> RunConfig:
        return RunConfig(
            engine=Engine(getattr(args, "engine", Engine.ORACLE.value)),
            edge_cap=args.edge_cap,
            vc_cap=args.vc_cap,
            rainbow_k_cap=args.k_cap,
            l_cap=args.l_cap,
            seed=args.seed,
            rounds_factor=getattr(args, "rounds_factor", 1.0),
            budget_ms=args.budget_ms,
            output=getattr(args, "out", None),
            dump_lp=getattr(args, "dump_lp", None),
            repeat=getattr(args, "repeat", 1),
        )

    def _summary(self, title: str, rows: List[tuple]) -> None:
        table = Table(title=title)
        table.add_column("field")
        table.add_column("value")
        for key, value in rows:
            table.add_row(str(key), str(value))
        self.console.print(table)

    def solve(self, args: argparse.Namespace) -> int:
        """Runs one engine; prints the verdict and, for YES, the `u v c` coloring."""
        run = self._run_config(args)
        graph = read_graph(args.graph)
        inst = MecsInstance(graph=graph, l=args.l, p=args.p)
        solution: MecsSolution = EngineRunner(run).solve(inst)

        lines = [solution.verdict.value]
        if solution.is_yes:
            ok, error = ColoringValidator.verify_witness(solution.witness, graph, inst.l, inst.p)
            if not ok:
                self.console.print(f"❌ Witness failed verification: {error}")
                return EXIT_ERROR
            lines.append(format_coloring(solution.witness, graph).rstrip("\n"))
        text = "\n".join(line for line in lines if line) + "\n"
        if run.output:
            Path(run.output).write_text(text)
        else:
            sys.stdout.write(text)

        self._summary("solve", [
            ("engine", run.engine.value),
            ("verdict", solution.verdict.value),
            ("optimum", solution.optimum if solution.optimum is not None else "-"),
            ("witness edges", solution.witness.size if solution.witness else 0),
            ("confidence", solution.confidence if solution.confidence is not None else "-"),
        ])
        if solution.verdict == Verdict.YES:
            return EXIT_YES
        return EXIT_NO if solution.verdict == Verdict.NO else EXIT_ERROR

    def kernelize(self, args: argparse.Namespace) -> int:
        """Writes the kernel graph (stdout or --out) and optionally the trace JSON."""
        inst = MecsInstance(graph=read_graph(args.input), l=args.l, p=args.p)
        trace = KernelService().kernelize(inst)
        text = format_graph(trace.final.graph)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        if args.trace:
            Path(args.trace).write_text(trace.model_dump_json(indent=2))
        self._summary("kernelize", [
            ("vertices", f"{inst.graph.n} -> {trace.final.graph.n}"),
            ("l", f"{inst.l} -> {trace.final.l}"),
            ("p", trace.final.p),
            ("modulator", len(trace.modulator)),
            ("rules applied", len(trace.steps)),
            ("vacuous", trace.vacuous),
            ("decided NO", trace.decided_no),
        ])
        return EXIT_YES

    def reduce_rainbow(self, args: argparse.Namespace) -> int:
        """Writes the labeled graph of the rainbow reduction; k is l."""
        inst = MecsInstance(graph=read_graph(args.input), l=args.l, p=args.p)
        ri = reduce_to_rainbow(inst)
        if args.out:
            write_labeled_graph(ri.lg, args.out)
            # re-read so the written file is known to parse
            read_labeled_graph(args.out)
        else:
            sys.stdout.write(format_labeled_graph(ri.lg))
        self._summary("reduce-rainbow", [("vertices", ri.lg.graph.n), ("edges", ri.lg.graph.m), ("k", ri.k)])
        return EXIT_YES

    def gen_gadget(self, args: argparse.Namespace) -> int:
        """Builds G' (or G'' with --modify) from an RBDS file."""
        rbds = parse_rbds(Path(args.rbds).read_text())
        service = ReductionService()
        layout = service.reduce_rbds(rbds)
        graph = layout.mecs.graph
        if args.modify:
            graph = service.modify_at(layout, [int(r) for r in args.modify.split(",") if r.strip()])
        text = format_graph(graph)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        if args.layout:
            Path(args.layout).write_text(layout.model_dump_json(indent=2))
        self._summary("gen-gadget", [
            ("vertices", graph.n),
            ("edges", graph.m),
            ("l", layout.mecs.l),
            ("p", layout.mecs.p),
            ("edge bound holds", layout.edge_bound_holds),
        ])
        return EXIT_YES

    def verify_claims(self, args: argparse.Namespace) -> int:
        reports = ClaimVerifier().verify_claims()
        self._summary("gadget claims", [(r.claim, f"{'pass' if r.passed else 'FAIL'} ({r.examined})") for r in reports])
        return EXIT_YES if all(r.passed for r in reports) else EXIT_NO

    def cross_validate(self, args: argparse.Namespace) -> int:
        """Compares every engine with the oracle over a corpus."""
        report = cross_validate(args.corpus, self._run_config(args))
        self._summary("cross-validate", [
            ("records", len(report.records)),
            ("disagreements", len(report.disagreements)),
            ("one-sided misses", report.one_sided_misses),
            ("kernel mismatches", report.kernel_mismatches),
        ])
        for line in report.disagreements:
            sys.stdout.write(line + "\n")
        return EXIT_YES if report.passed else EXIT_NO

    def bench(self, args: argparse.Namespace) -> int:
        """Writes the benchmark CSV (stdout or --out)."""
        run = self._run_config(args)
        engines = [Engine(name) for name in args.engines.split(",")]
        sizes = [int(size) for size in args.sizes.split(",")]
        frame = bench(generate(args.generator, sizes, args.p, run.seed), engines, run, args.deterministic)
        if args.out:
            frame.to_csv(args.out, index=False)
        else:
            sys.stdout.write(frame.to_csv(index=False))
        self._summary("bench", [("rows", len(frame)), ("generator", args.generator)])
        return EXIT_YES

    def verify(self, args: argparse.Namespace) -> int:
        """Re-checks a coloring file: 0 valid, 1 invalid, 2 unreadable."""
        graph = read_graph(args.graph)
        coloring = parse_coloring(Path(args.coloring).read_text(), graph, args.p)
        ok, error = ColoringValidator.verify_witness(coloring, graph, args.l, args.p)
        if ok:
            self.console.print(f"✅ Valid: {coloring.size} edges, {coloring.colors_used()} colors")
            return EXIT_YES
        self.console.print(f"❌ Invalid: {error}")
        return EXIT_NO


def _add_caps(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="Random seed")
    parser.add_argument("--edge-cap", type=int, default=config.ORACLE_EDGE_CAP, help="Oracle edge cap")
    parser.add_argument("--vc-cap", type=int, default=config.ILP_VC_CAP, help="ILP vertex cover cap")
    parser.add_argument("--k-cap", type=int, default=config.RAINBOW_K_CAP, help="Rainbow target cap")
    parser.add_argument("--l-cap", type=int, default=config.DIVIDE_COLOR_L_CAP, help="Divide-and-color l cap")
    parser.add_argument("--budget-ms", type=int, default=config.BUDGET_MS, help="Wall-time budget (0 = none)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app.cli",
        description="MECS toolkit - Maximum Edge Colorable Subgraph solvers, kernels and gadgets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Decide whether K4 has 4 edges colorable with 2 colors
  python -m app.cli solve --engine oracle --l 4 --p 2 data/corpus/k4.txt

  # Kernelize and keep the trace
  python -m app.cli kernelize --in g.txt --l 5 --p 2 --trace trace.json

  # Build the hardness instance of an RBDS file
  python -m app.cli gen-gadget --rbds rbds.txt --out g.txt --layout layout.json

  # Compare all engines on the bundled corpus
  python -m app.cli cross-validate data/corpus
        """
    )
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="Logging level (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Decide a MECS instance")
    solve.add_argument("graph", help="Graph file ('n m' then 'u v' lines)")
    solve.add_argument("--l", type=int, required=True)
    solve.add_argument("--p", type=int, required=True)
    solve.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.ORACLE.value)
    solve.add_argument("--rounds-factor", type=float, default=1.0, help="Divide-and-color rounds multiplier")
    solve.add_argument("--repeat", type=int, default=1, help="Divide-and-color seeds to try")
    solve.add_argument("--out", help="Solution file (default: stdout)")
    solve.add_argument("--dump-lp", help="Write the ILP model here")
    _add_caps(solve)
    solve.set_defaults(handler=MecsCLI.solve)

    kernel = sub.add_parser("kernelize", help="Kernelize around a deg-1-modulator")
    kernel.add_argument("--in", dest="input", required=True)
    kernel.add_argument("--l", type=int, required=True)
    kernel.add_argument("--p", type=int, required=True)
    kernel.add_argument("--out", help="Kernel graph file (default: stdout)")
    kernel.add_argument("--trace", help="Trace JSON file")
    kernel.set_defaults(handler=MecsCLI.kernelize)

    rainbow = sub.add_parser("reduce-rainbow", help="Emit the rainbow matching instance")
    rainbow.add_argument("--in", dest="input", required=True)
    rainbow.add_argument("--l", type=int, required=True)
    rainbow.add_argument("--p", type=int, required=True)
    rainbow.add_argument("--out", help="Labeled graph file (default: stdout)")
    rainbow.set_defaults(handler=MecsCLI.reduce_rainbow)

    gadget = sub.add_parser("gen-gadget", help="RBDS to MECS reduction")
    gadget.add_argument("--rbds", required=True, help="RBDS file ('|R| |B| m k' then 'r b' lines)")
    gadget.add_argument("--out", help="Graph file (default: stdout)")
    gadget.add_argument("--layout", help="Layout JSON file")
    gadget.add_argument("--modify", help="Comma-separated red vertices to split (emits G'')")
    gadget.set_defaults(handler=MecsCLI.gen_gadget)

    claims = sub.add_parser("verify-claims", help="Exhaustively check the gadget coloring properties")
    claims.set_defaults(handler=MecsCLI.verify_claims)

    cross = sub.add_parser("cross-validate", help="Compare engines over a corpus")
    cross.add_argument("corpus", help="Directory with manifest.csv")
    _add_caps(cross)
    cross.set_defaults(handler=MecsCLI.cross_validate)

    bench_cmd = sub.add_parser("bench", help="Benchmark CSV")
    bench_cmd.add_argument("--generator", choices=GENERATORS, default="random")
    bench_cmd.add_argument("--sizes", default="4,5,6", help="Comma-separated sizes")
    bench_cmd.add_argument("--p", type=int, default=2)
    bench_cmd.add_argument("--engines", default="oracle,ilp,rainbow,divide-color")
    bench_cmd.add_argument("--out", help="CSV file (default: stdout)")
    bench_cmd.add_argument("--deterministic", action="store_true", help="Leave wall time empty")
    _add_caps(bench_cmd)
    bench_cmd.set_defaults(handler=MecsCLI.bench)

    verify = sub.add_parser("verify", help="Check a coloring file")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--coloring", required=True)
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--l", type=int, default=0)
    verify.set_defaults(handler=MecsCLI.verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    cli = MecsCLI()
    try:
        return args.handler(cli, args)
    except (MecsError, ValidationError, ValueError, OSError) as exc:
        cli.console.print(f"❌ {exc}")
        logger.debug("command failed", exc_info=True)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
