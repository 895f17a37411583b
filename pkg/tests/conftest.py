"""
Pytest configuration and fixtures for the service and CLI test suite
"""
import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

# Add repository root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.mecs.core import find_coloring  # noqa: E402
from app.mecs.models import EdgeColoring, Graph, MecsInstance, RbdsInstance, RunConfig  # noqa: E402

CORPUS_DIR = Path(__file__).parent.parent / "data" / "corpus"


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    """Uniform simple graph on n vertices with min(m, n choose 2) edges."""
    pairs = list(combinations(range(n), 2))
    return Graph(n=n, edges=rng.sample(pairs, min(m, len(pairs))))


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=list(combinations(range(n), 2)))


def fuzz_graph_set(count: int, seed: int = 2024, max_n: int = 7, max_m: int = 9) -> list:
    """Seeded random graphs with 2 <= n <= max_n and 1 <= m <= max_m."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        graphs.append(random_graph(rng, n, rng.randint(1, max_m)))
    return graphs


def random_rbds(rng: random.Random, max_red: int, max_blue: int, max_edges: int) -> RbdsInstance:
    """A random RBDS instance without isolated vertices; k is set to the number of reds."""
    while True:
        n_red, n_blue = rng.randint(1, max_red), rng.randint(1, max_blue)
        pairs = [(r, b) for r in range(n_red) for b in range(n_blue)]
        edges = sorted(rng.sample(pairs, rng.randint(1, min(max_edges, len(pairs)))))
        if {r for r, _ in edges} == set(range(n_red)) and {b for _, b in edges} == set(range(n_blue)):
            return RbdsInstance(n_red=n_red, n_blue=n_blue, edges=edges, k=n_red)


def split_witness(service, layout, chosen) -> EdgeColoring:
    """
    3-colors G' split at `chosen` and drops the moved root edges, which
    leaves a coloring of m - len(chosen) edges of G' itself.
    """
    coloring = find_coloring(service.modify_at(layout, chosen), 3)
    assert coloring is not None
    moved = {layout.red[r].root_pair[1] for r in chosen}
    return EdgeColoring(assignment={e: c for e, c in coloring.items() if e not in moved}, p=3)


# ===== Graph fixtures =====

@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def star5():
    """K_{1,5} with center 0."""
    return Graph(n=6, edges=[(0, i) for i in range(1, 6)])


@pytest.fixture
def c5():
    return Graph(n=5, edges=[(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def two_triangles():
    """Two triangles joined by the bridge 2-3."""
    return Graph(n=6, edges=[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def fuzz_graphs():
    """Thirty seeded random graphs with n <= 7 and m <= 9."""
    return fuzz_graph_set(30)


# ===== Instance fixtures =====

@pytest.fixture
def k4_instance(k4):
    return MecsInstance(graph=k4, l=6, p=3)


@pytest.fixture
def single_edge_rbds():
    return RbdsInstance(n_red=1, n_blue=1, edges=[(0, 0)], k=1)


@pytest.fixture
def path_rbds():
    """Red 0 - blue 0 - red 1 - blue 1: red 1 alone dominates, k = 1."""
    return RbdsInstance(n_red=2, n_blue=2, edges=[(0, 0), (1, 0), (1, 1)], k=1)


@pytest.fixture
def run_config():
    """Small caps so exponential engines stay fast."""
    return RunConfig(edge_cap=24, vc_cap=4, rainbow_k_cap=12, l_cap=8, seed=0, repeat=2)


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR
