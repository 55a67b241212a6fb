"""Graphs as bitset adjacency tables, graph6 I/O and matching polynomials."""

from .graph import Graph, VertexSet, bits, iter_bits, mask_of, union_edges
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .matching_polynomial import MatchPolyCache, matching_polynomial, mult

__all__ = [
    "Graph",
    "Graph6Error",
    "MatchPolyCache",
    "VertexSet",
    "bits",
    "iter_bits",
    "mask_of",
    "matching_polynomial",
    "mult",
    "parse_graph6",
    "to_graph6",
    "union_edges",
]
