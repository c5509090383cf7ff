import numpy as np
import pytest

from src.knots.library import TREFOIL, builtin_knots
from src.knots.pd import diagram_from_text
from src.knots.tait import TaitGraph


@pytest.fixture
def trefoil():
    return diagram_from_text(TREFOIL)


@pytest.fixture
def triangle():
    return TaitGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


@pytest.fixture
def theta():
    return TaitGraph.from_edges(2, [(0, 1, -1)] * 3)


@pytest.fixture(scope="session")
def builtins():
    return builtin_knots()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_signed_graph(rng, n, m, loops=True):
    edges = []
    for _ in range(m):
        u = int(rng.integers(n))
        v = u if loops and rng.random() < 0.1 else int(rng.integers(n))
        edges.append((u, v, int(rng.choice([-1, 1]))))
    return TaitGraph.from_edges(n, edges)
