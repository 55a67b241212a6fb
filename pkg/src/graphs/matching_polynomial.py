"""Exact matching polynomials with memoisation on live-vertex masks.

The matching polynomial is ``mu(G, x) = sum_r (-1)^r p(G, r) x^(n - 2r)`` where
``p(G, r)`` counts matchings with ``r`` edges. It is computed by splitting into
connected components and multiplying, and inside a component by the vertex
recurrence ``mu(G) = x mu(G - u) - sum_{i ~ u} mu(G - u - i)``.

Usage:
    cache = MatchPolyCache.for_graph(g)
    poly = matching_polynomial(g, cache)
    k = mult(theta, g.delete_vertices([u]), cache)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from src.algebra.algebraic import AlgebraicNumber, real_roots, root_multiplicity
from src.algebra.polynomial import Polynomial, derivative, shift_degree, sub
from src.errors import OracleCapError

from .graph import Graph, VertexSet, components_of, iter_bits

logger = logging.getLogger(__name__)

ONE = Polynomial((1,))
X = Polynomial((0, 1))
ORACLE_MAX_VERTICES = 12
CACHE_MAX_ENTRIES = 1_000_000


@dataclass
class MatchPolyCache:
    """Matching polynomials of the induced subgraphs of one root graph.

    Attributes:
        adjacency: Adjacency of the root graph the masks refer to.
        max_entries: Entry cap; the table is cleared when it is reached.
        table: Live mask to matching polynomial.
        multiplicities: ``(theta, mask)`` to root multiplicity.
        hits: Table lookups answered from the cache.
        misses: Table lookups that had to be computed.
        clears: Number of clear-on-cap evictions.
    """

    adjacency: tuple[int, ...]
    max_entries: int = CACHE_MAX_ENTRIES
    table: dict[VertexSet, Polynomial] = field(default_factory=dict)
    multiplicities: dict[tuple[AlgebraicNumber, VertexSet], int] = field(
        default_factory=dict
    )
    hits: int = 0
    misses: int = 0
    clears: int = 0

    @classmethod
    def for_graph(
        cls, g: Graph, max_entries: int = CACHE_MAX_ENTRIES
    ) -> MatchPolyCache:
        return cls(g.adjacency, max_entries)

    def check(self, g: Graph) -> None:
        """Ensure ``g`` is a view of this cache's root graph."""
        if g.adjacency is not self.adjacency and g.adjacency != self.adjacency:
            msg = "Graph is not an induced view of the cache's root graph"
            raise ValueError(msg)

    def lookup(self, mask: VertexSet) -> Polynomial | None:
        poly = self.table.get(mask)
        if poly is None:
            self.misses += 1
        else:
            self.hits += 1
        return poly

    def store(self, mask: VertexSet, poly: Polynomial) -> None:
        if len(self.table) >= self.max_entries:
            logger.warning(
                f"Matching polynomial cache reached {self.max_entries} entries, "
                "clearing"
            )
            self.table.clear()
            self.multiplicities.clear()
            self.clears += 1
        self.table[mask] = poly

    def log_stats(self) -> None:
        logger.debug(
            f"Cache: {len(self.table)} entries, {self.hits} hits, "
            f"{self.misses} misses, {self.clears} clears"
        )


def _pivot(adjacency: tuple[int, ...], mask: VertexSet) -> int:
    """Maximum-degree vertex of the component, lowest index on ties."""
    best, best_degree = -1, -1
    for v in iter_bits(mask):
        degree = (adjacency[v] & mask).bit_count()
        if degree > best_degree:
            best, best_degree = v, degree
    return best


def _mu(
    adjacency: tuple[int, ...], mask: VertexSet, cache: MatchPolyCache
) -> Polynomial:
    if not mask:
        return ONE
    cached = cache.lookup(mask)
    if cached is not None:
        return cached

    parts = components_of(adjacency, mask)
    if len(parts) > 1:
        result = ONE
        for part in parts:
            result = result * _mu(adjacency, part, cache)
    elif mask & (mask - 1) == 0:
        result = X
    else:
        u = _pivot(adjacency, mask)
        rest = mask & ~(1 << u)
        result = shift_degree(_mu(adjacency, rest, cache), 1)
        for i in iter_bits(adjacency[u] & rest):
            result = sub(result, _mu(adjacency, rest & ~(1 << i), cache))

    cache.store(mask, result)
    return result


def matching_polynomial(g: Graph, cache: MatchPolyCache | None = None) -> Polynomial:
    """Exact ``mu(g, x)``; monic of degree ``g.order``.

    Raises:
        ValueError: If ``cache`` belongs to a different root graph.
    """
    if cache is None:
        cache = MatchPolyCache.for_graph(g)
    cache.check(g)
    return _mu(g.adjacency, g.live, cache)


def matching_counts(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> list[int]:
    """Number of ``r``-matchings for ``r = 0, 1, ...`` by direct enumeration.

    Raises:
        OracleCapError: If ``g`` has more than ``max_vertices`` live vertices.
    """
    if g.order > max_vertices:
        msg = (
            f"Brute-force matching count refused: {g.order} > {max_vertices} vertices"
        )
        raise OracleCapError(msg)
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges()]
    counts = [0] * (g.order // 2 + 1)

    def extend(start: int, used: VertexSet, size: int) -> None:
        counts[size] += 1
        for k in range(start, len(edge_masks)):
            if not used & edge_masks[k]:
                extend(k + 1, used | edge_masks[k], size + 1)

    extend(0, 0, 0)
    return counts


def matching_polynomial_oracle(
    g: Graph, max_vertices: int = ORACLE_MAX_VERTICES
) -> Polynomial:
    """``mu(g, x)`` assembled straight from the matching counts."""
    counts = matching_counts(g, max_vertices)
    n = g.order
    coeffs = [0] * (n + 1)
    for r, count in enumerate(counts):
        coeffs[n - 2 * r] = -count if r % 2 else count
    return Polynomial(tuple(coeffs))


def mult(theta: AlgebraicNumber, g: Graph, cache: MatchPolyCache | None = None) -> int:
    """Multiplicity of ``theta`` as a root of ``mu(g, x)``."""
    if cache is None:
        cache = MatchPolyCache.for_graph(g)
    cache.check(g)
    key = (theta, g.live)
    known = cache.multiplicities.get(key)
    if known is not None:
        return known
    value = root_multiplicity(theta, matching_polynomial(g, cache))
    cache.multiplicities[key] = value
    return value


def theta_candidates(
    g: Graph, cache: MatchPolyCache | None = None
) -> list[AlgebraicNumber]:
    """Every distinct root of ``mu(g, x)`` in increasing order."""
    return real_roots(matching_polynomial(g, cache))


def edge_recurrence_holds(
    g: Graph, u: int, v: int, cache: MatchPolyCache | None = None
) -> bool:
    """Check ``mu(G) = mu(G - uv) - mu(G - u - v)`` for the edge ``uv``."""
    if cache is None:
        cache = MatchPolyCache.for_graph(g)
    without_edge = g.delete_edge(u, v)
    lhs = matching_polynomial(g, cache)
    rhs = sub(
        matching_polynomial(without_edge),
        matching_polynomial(g.delete_vertices([u, v]), cache),
    )
    return lhs == rhs


def derivative_identity_holds(g: Graph, cache: MatchPolyCache | None = None) -> bool:
    """Check that the derivative of ``mu(G)`` is the sum of ``mu(G - v)``."""
    if cache is None:
        cache = MatchPolyCache.for_graph(g)
    total = Polynomial()
    for v in g.vertices():
        total = total + matching_polynomial(g.delete_vertices([v]), cache)
    return derivative(matching_polynomial(g, cache)) == total
