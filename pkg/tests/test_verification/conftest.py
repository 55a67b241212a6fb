"""Fixtures for the verification tests."""

import pytest

from src.config.models import EngineConfig
from src.graphs.graph import Graph
from src.graphs.matching_polynomial import MatchPolyCache


@pytest.fixture
def config() -> EngineConfig:
    """Provide the default engine configuration."""
    return EngineConfig()


@pytest.fixture
def p3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def p3_cache(p3: Graph) -> MatchPolyCache:
    return MatchPolyCache.for_graph(p3)
