"""
Shared fixtures for the foundation tests.
"""

import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[3]))

from app.mecs.models import Graph  # noqa: E402


# ===== Fixtures =====

@pytest.fixture
def triangle():
    return Graph(n=3, edges=[(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4():
    return Graph(n=4, edges=list(combinations(range(4), 2)))


@pytest.fixture
def path3():
    return Graph(n=3, edges=[(0, 1), (1, 2)])


@pytest.fixture
def star5():
    return Graph(n=6, edges=[(0, i) for i in range(1, 6)])


@pytest.fixture
def c5():
    return Graph(n=5, edges=[(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(n=10, edges=outer + spokes + inner)


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n=n, edges=rng.sample(pairs, min(m, len(pairs))))


@pytest.fixture
def small_graphs():
    """Forty seeded random graphs with n <= 7 and m <= 10."""
    rng = random.Random(7)
    graphs = []
    for _ in range(40):
        n = rng.randint(2, 7)
        graphs.append(random_graph(rng, n, rng.randint(0, 10)))
    return graphs
