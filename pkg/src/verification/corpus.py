"""Graph corpora for the verification harness.

The exhaustive atlas and the random samples come from networkx; every graph is
converted to a :class:`Graph` with its nodes renumbered in sorted order.
Generation is seeded, so a corpus spec always yields the same graphs in the
same order.
"""

import json
import logging
import random
from collections.abc import Iterator
from pathlib import Path

import networkx as nx

from src.graphs.graph import Graph, check_vertex_cap
from src.graphs.graph6 import read_graph6_file

from .models import CorpusSpec

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).parent / "fixtures"
EXAMPLE10_PATH = FIXTURES_DIR / "example10.json"


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph, numbering its nodes in sorted order."""
    nodes = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
    return Graph.from_edges(len(nodes), edges)


def to_networkx(g: Graph) -> nx.Graph:
    """The live part of ``g`` with its root vertex numbers as nodes."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices())
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def example10_graph() -> Graph:
    """The ten-vertex example with special vertices u=0 and v=1."""
    with EXAMPLE10_PATH.open() as f:
        return Graph.from_edge_json(json.load(f))


def _atlas(spec: CorpusSpec) -> Iterator[Graph]:
    for nx_graph in nx.graph_atlas_g():
        if spec.min_n <= nx_graph.number_of_nodes() <= spec.max_n:
            yield from_networkx(nx_graph)


def _generated(spec: CorpusSpec) -> Iterator[Graph]:
    rng = random.Random(spec.seed)  # noqa: S311
    for _ in range(spec.count):
        n = rng.randint(spec.min_n, spec.max_n)
        graph_seed = rng.getrandbits(32)
        yield from_networkx(nx.gnp_random_graph(n, spec.p, seed=graph_seed))


def iter_corpus(spec: CorpusSpec, max_vertices: int = 64) -> Iterator[Graph]:
    """Yield the graphs of ``spec`` in a fixed order.

    Raises:
        ValueError: If a graph exceeds ``max_vertices``.
        OSError: If a graph6 file cannot be read.
    """
    logger.info(f"Loading corpus: {spec.describe()}")
    if spec.source == "example10":
        graphs: Iterator[Graph] = iter([example10_graph()])
    elif spec.source == "atlas":
        graphs = _atlas(spec)
    elif spec.source == "gen":
        graphs = _generated(spec)
    elif spec.path is not None:
        graphs = read_graph6_file(spec.path, max_vertices)
    else:
        msg = "A file corpus needs a path"
        raise ValueError(msg)
    for g in graphs:
        check_vertex_cap(g.order, max_vertices)
        yield g
