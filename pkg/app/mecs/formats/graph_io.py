"""
Plain-text formats.

- Graph: `n m`, then m lines `u v` (0 <= u, v < n, u != v).
- Coloring: one line `u v c` per colored edge.
- Labeled graph: `n m`, then m lines `u v label`.
- RBDS: `|R| |B| m k`, then m lines `r b`.

Lines starting with `#` and blank lines are ignored everywhere.
"""

from pathlib import Path
from typing import Iterator, List, Tuple, Union

from pydantic import ValidationError

from ..models.gadget import RbdsInstance
from ..models.graph import EdgeColoring, Graph
from ..models.rainbow import LabeledGraph
from ..validation.validators import GraphFormatError

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield line_no, stripped.split()


def _ints(tokens: List[str], count: int, line_no: int) -> List[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(tokens)}", line_no)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {' '.join(tokens)!r}", line_no)


def _parse_edge_list(text: str, width: int) -> Tuple[int, List[Tuple[int, ...]]]:
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input: missing 'n m' header", 1)
    n, m = _ints(header, 2, header_line)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative", header_line)

    rows: List[Tuple[int, ...]] = []
    seen = set()
    for line_no, tokens in lines:
        values = _ints(tokens, width, line_no)
        u, v = values[0], values[1]
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {u} {v} (n={n})", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", line_no)
        seen.add(key)
        rows.append(tuple(values))
    if len(rows) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows)}", header_line)
    return n, rows


def parse_graph(text: str) -> Graph:
    n, rows = _parse_edge_list(text, 2)
    return Graph(n=n, edges=[(u, v) for u, v in rows])


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_graph(g))


def parse_coloring(text: str, g: Graph, p: int) -> EdgeColoring:
    assignment = {}
    for line_no, tokens in _content_lines(text):
        u, v, c = _ints(tokens, 3, line_no)
        edge = g.edge_index(u, v)
        if edge is None:
            raise GraphFormatError(f"{u} {v} is not an edge of the graph", line_no)
        if edge in assignment:
            raise GraphFormatError(f"edge {u} {v} colored twice", line_no)
        assignment[edge] = c
    try:
        return EdgeColoring(assignment=assignment, p=p)
    except ValidationError as exc:
        raise GraphFormatError(str(exc.errors()[0]["msg"]))


def format_coloring(coloring: EdgeColoring, g: Graph) -> str:
    lines = []
    for edge in sorted(coloring.assignment):
        u, v = g.edges[edge]
        lines.append(f"{u} {v} {coloring.assignment[edge]}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_labeled_graph(text: str) -> LabeledGraph:
    n, rows = _parse_edge_list(text, 3)
    graph = Graph(n=n, edges=[(u, v) for u, v, _ in rows])
    try:
        return LabeledGraph(graph=graph, labels=tuple(label for _, _, label in rows))
    except ValidationError as exc:
        raise GraphFormatError(str(exc.errors()[0]["msg"]))


def format_labeled_graph(lg: LabeledGraph) -> str:
    g = lg.graph
    lines = [f"{g.n} {g.m}"] + [f"{u} {v} {label}" for (u, v), label in zip(g.edges, lg.labels)]
    return "\n".join(lines) + "\n"


def read_labeled_graph(path: PathLike) -> LabeledGraph:
    return parse_labeled_graph(Path(path).read_text())


def write_labeled_graph(lg: LabeledGraph, path: PathLike) -> None:
    Path(path).write_text(format_labeled_graph(lg))


def parse_rbds(text: str) -> RbdsInstance:
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input: missing '|R| |B| m k' header", 1)
    n_red, n_blue, m, k = _ints(header, 4, header_line)
    edges = []
    for line_no, tokens in lines:
        edges.append(tuple(_ints(tokens, 2, line_no)))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", header_line)
    try:
        return RbdsInstance(n_red=n_red, n_blue=n_blue, edges=edges, k=k)
    except ValidationError as exc:
        raise GraphFormatError(str(exc.errors()[0]["msg"]))


def format_rbds(inst: RbdsInstance) -> str:
    lines = [f"{inst.n_red} {inst.n_blue} {len(inst.edges)} {inst.k}"]
    lines += [f"{r} {b}" for r, b in inst.edges]
    return "\n".join(lines) + "\n"
