import random

import pytest
from hypothesis import HealthCheck, settings

from matchcut import Graph, build_graph

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def two_triangles() -> Graph:
    """Two triangles joined by two disjoint edges; has a matching cut,
    a perfect matching, but neither a disconnected perfect matching nor
    a perfect matching cut."""
    return build_graph(6, [(0, 1), (1, 4), (4, 5), (2, 5), (2, 3), (0, 3), (0, 4), (3, 5)])


@pytest.fixture
def domino() -> Graph:
    """The 2x3 grid; its unique perfect matching cut has X = {0, 3, 4},
    and {(0,1),(3,4),(2,5)} is a disconnected perfect matching that is
    not a perfect matching cut."""
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (2, 5)])


@pytest.fixture
def two_squares() -> Graph:
    """Two squares joined by an edge (the sweep-trace example rooted at
    vertex 0); admits the perfect matching cut X = {0, 1, 4}."""
    return build_graph(6, [(0, 2), (0, 1), (1, 3), (2, 3), (3, 5), (4, 5), (1, 4)])


@pytest.fixture
def braced_hexagon() -> Graph:
    """Hexagon with two chords (the no-answer sweep-trace example rooted
    at vertex 2); has no perfect matching cut."""
    return build_graph(6, [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 2), (3, 5)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)
