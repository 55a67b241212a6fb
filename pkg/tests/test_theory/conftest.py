"""Small graphs with hand-checked decompositions."""

import pytest

from src.graphs.graph import Graph


@pytest.fixture
def p3() -> Graph:
    """Path 0-1-2."""
    return Graph.path(3)


@pytest.fixture
def two_k2() -> Graph:
    """Disjoint edges 0-1 and 2-3."""
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def claw() -> Graph:
    """K_{1,3} with centre 0."""
    return Graph.star(3)
