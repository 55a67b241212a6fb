"""Pytest configuration and shared fixtures for the theta-gallai tests."""

from pathlib import Path

import pytest

from src.algebra.algebraic import AlgebraicNumber
from src.algebra.polynomial import Polynomial
from src.graphs.graph import Graph

EXAMPLE10_EDGES = [
    (0, 2),
    (0, 4),
    (1, 4),
    (1, 6),
    (1, 8),
    (2, 3),
    (4, 5),
    (6, 7),
    (8, 9),
]


@pytest.fixture
def temp_dir(tmp_path: Path) -> Path:
    """Provide a temporary directory for test files."""
    return tmp_path


@pytest.fixture
def example10() -> Graph:
    """Provide the ten-vertex graph with A_1 = {0, 1} and four K2 components.

    Vertices 0 and 1 are the two special vertices; {2,3}, {4,5}, {6,7} and
    {8,9} are the critical components. Vertex 3 and vertex 5 are the pair
    whose joint deletion drops the multiplicity of 1 to one.
    """
    return Graph.from_edges(10, EXAMPLE10_EDGES)


@pytest.fixture
def one() -> AlgebraicNumber:
    return AlgebraicNumber.from_rational(1)


@pytest.fixture
def zero() -> AlgebraicNumber:
    return AlgebraicNumber.from_rational(0)


@pytest.fixture
def sqrt2_theta() -> AlgebraicNumber:
    """Provide sqrt(2), a root of the matching polynomial of P3."""
    return AlgebraicNumber.from_interval(Polynomial((-2, 0, 1)), 1, 2)
