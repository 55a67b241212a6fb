"""Simple undirected graphs over integer bitsets with masked induced views.

A :class:`Graph` is a root adjacency table plus a live-vertex mask. Deleting
vertices only narrows the mask, so every induced subgraph of a root shares its
adjacency and vertex numbering. That makes the live mask a complete key for
memoising anything computed on induced subgraphs.

Vertex sets are plain ``int`` bitmasks: bit ``i`` set means vertex ``i`` is in
the set. Python integers grow as needed, so graphs above 64 vertices keep the
same interface.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger(__name__)

MAX_VERTICES = 64

VertexSet = int


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: VertexSet) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: VertexSet) -> int:
    """Index of the lowest set bit; ``mask`` must be nonzero."""
    return (mask & -mask).bit_length() - 1


def check_vertex_cap(n: int, max_vertices: int = MAX_VERTICES) -> None:
    if n < 0:
        msg = f"Vertex count must be nonnegative, got {n}"
        raise ValueError(msg)
    if n > max_vertices:
        msg = f"Graph has {n} vertices, above the cap of {max_vertices}"
        raise ValueError(msg)


def components_of(adjacency: tuple[int, ...], mask: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``mask``."""
    remaining = mask
    result: list[VertexSet] = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adjacency[v]
            frontier = reach & remaining & ~seen
            seen |= frontier
        result.append(seen)
        remaining &= ~seen
    return result


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph, possibly a masked view of a larger root graph.

    Attributes:
        n: Number of vertices of the root graph.
        adjacency: Root adjacency bitsets, one per vertex.
        live: Mask of the vertices present in this view.
        labels: Optional display names for the root vertices.
    """

    n: int
    adjacency: tuple[int, ...]
    live: VertexSet
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            msg = f"Adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            raise ValueError(msg)
        if self.live >> self.n:
            msg = "Live mask names vertices outside the root graph"
            raise ValueError(msg)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> Graph:
        """Build a graph on vertices ``0..n-1``.

        Raises:
            ValueError: On self-loops or endpoints outside ``0..n-1``.
        """
        adjacency = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                msg = f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
                raise ValueError(msg)
            if u == v:
                msg = f"Self-loop at vertex {u}"
                raise ValueError(msg)
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        label_tuple = tuple(labels) if labels is not None else None
        if label_tuple is not None and len(label_tuple) != n:
            msg = f"Expected {n} labels, got {len(label_tuple)}"
            raise ValueError(msg)
        return cls(n, tuple(adjacency), (1 << n) - 1, label_tuple)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            msg = f"A cycle needs at least 3 vertices, got {n}"
            raise ValueError(msg)
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """``K_{1,leaves}`` with centre ``0``."""
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def disjoint_union(cls, *graphs: Graph) -> Graph:
        """Place compacted copies of ``graphs`` side by side, numbered in order."""
        edges: list[tuple[int, int]] = []
        offset = 0
        for g in graphs:
            compact, _ = g.compact()
            edges.extend((u + offset, v + offset) for u, v in compact.edges())
            offset += compact.n
        return cls.from_edges(offset, edges)

    @classmethod
    def from_edge_json(
        cls, data: dict[str, Any], max_vertices: int = MAX_VERTICES
    ) -> Graph:
        """Read ``{"n": int, "edges": [[u, v], ...]}``."""
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
        except (KeyError, TypeError, ValueError) as e:
            msg = f"Malformed edge-list JSON: {e}"
            raise ValueError(msg) from e
        check_vertex_cap(n, max_vertices)
        return cls.from_edges(n, edges, data.get("labels"))

    def to_edge_json(self) -> dict[str, Any]:
        """Edge list of the compacted view."""
        compact, _ = self.compact()
        return {"n": compact.n, "edges": [list(e) for e in compact.edges()]}

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        """Number of live vertices."""
        return self.live.bit_count()

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def vertices(self) -> list[int]:
        return bits(self.live)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def neighbors(self, v: int) -> VertexSet:
        return self.adjacency[v] & self.live

    def degree(self, v: int) -> int:
        return self.neighbors(v).bit_count()

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.live >> v & 1)

    def has_edge(self, u: int, v: int) -> bool:
        if not (self.has_vertex(u) and self.has_vertex(v)):
            return False
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Live edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u in iter_bits(self.live)
            for v in iter_bits(self.neighbors(u) >> (u + 1) << (u + 1))
        ]

    def is_clique(self, mask: VertexSet) -> bool:
        return all(mask & ~(1 << v) & ~self.adjacency[v] == 0 for v in iter_bits(mask))

    def is_independent(self, mask: VertexSet) -> bool:
        return all(self.adjacency[v] & mask == 0 for v in iter_bits(mask))

    def same_induced(self, other: Graph) -> bool:
        """Whether both views have the same live vertices and the same edges."""
        if self.live != other.live:
            return False
        return all(
            self.neighbors(v) == other.neighbors(v) for v in iter_bits(self.live)
        )

    # -- derived views ----------------------------------------------------

    def _require_live(self, mask: VertexSet) -> None:
        if mask & ~self.live:
            msg = f"Vertices {bits(mask & ~self.live)} are not live in this graph"
            raise ValueError(msg)

    def delete_vertices(self, vertices: VertexSet | Iterable[int]) -> Graph:
        """Induced subgraph on the live vertices outside ``vertices``."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        self._require_live(mask)
        return Graph(self.n, self.adjacency, self.live & ~mask, self.labels)

    def restrict(self, mask: VertexSet) -> Graph:
        """Induced subgraph on ``mask``."""
        self._require_live(mask)
        return Graph(self.n, self.adjacency, mask, self.labels)

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            msg = f"({u}, {v}) is not an edge"
            raise ValueError(msg)
        adjacency = list(self.adjacency)
        adjacency[u] &= ~(1 << v)
        adjacency[v] &= ~(1 << u)
        return Graph(self.n, tuple(adjacency), self.live, self.labels)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or not (self.has_vertex(u) and self.has_vertex(v)):
            msg = f"Cannot add edge ({u}, {v})"
            raise ValueError(msg)
        adjacency = list(self.adjacency)
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        return Graph(self.n, tuple(adjacency), self.live, self.labels)

    def complement(self) -> Graph:
        """Complement on the live vertices; dead vertices stay isolated."""
        adjacency = [0] * self.n
        for v in iter_bits(self.live):
            adjacency[v] = self.live & ~self.adjacency[v] & ~(1 << v)
        return Graph(self.n, tuple(adjacency), self.live, self.labels)

    def compact(self) -> tuple[Graph, list[int]]:
        """Renumber the live vertices as ``0..order-1``.

        Returns:
            The compacted graph and the list mapping new indices to old ones.
        """
        old = self.vertices()
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges()]
        labels = [self.label(v) for v in old] if self.labels is not None else None
        return Graph.from_edges(len(old), edges, labels), old

    def components(self) -> list[VertexSet]:
        """Connected components sorted by their lowest vertex."""
        return components_of(self.adjacency, self.live)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def maximal_cliques(self) -> list[VertexSet]:
        """All maximal cliques, ordered lexicographically by sorted members.

        Bron-Kerbosch with pivoting on bitsets; the pivot is the candidate
        with the most neighbours in ``P | X``.
        """
        found: list[VertexSet] = []

        def expand(r: VertexSet, p: VertexSet, x: VertexSet) -> None:
            if not p and not x:
                found.append(r)
                return
            pivot = max(
                iter_bits(p | x), key=lambda u: (self.adjacency[u] & p).bit_count()
            )
            for v in iter_bits(p & ~self.adjacency[pivot]):
                nbrs = self.adjacency[v]
                expand(r | 1 << v, p & nbrs, x & nbrs)
                p &= ~(1 << v)
                x |= 1 << v

        if self.live:
            expand(0, self.live, 0)
        found.sort(key=bits)
        return found

    def paths_between(self, u: int, v: int) -> Iterator[tuple[int, ...]]:
        """Every simple ``u``-``v`` path, depth first with ascending neighbours."""
        if u == v or not (self.has_vertex(u) and self.has_vertex(v)):
            msg = f"paths_between needs two distinct live vertices, got {u} and {v}"
            raise ValueError(msg)
        stack: list[int] = [u]

        def walk(current: int, used: VertexSet) -> Iterator[tuple[int, ...]]:
            for w in iter_bits(self.neighbors(current) & ~used):
                stack.append(w)
                if w == v:
                    yield tuple(stack)
                else:
                    yield from walk(w, used | 1 << w)
                stack.pop()

        yield from walk(u, 1 << u)

    def __str__(self) -> str:
        return f"Graph(order={self.order}, edges={len(self.edges())})"


def union_edges(a: Graph, b: Graph) -> Graph:
    """Graph on the shared vertex set whose edges are those of ``a`` or ``b``.

    Raises:
        ValueError: If the two graphs have different vertex sets.
    """
    if a.n != b.n or a.live != b.live:
        msg = "union_edges needs graphs on the same vertex set"
        raise ValueError(msg)
    adjacency = tuple(
        (x | y) & a.live for x, y in zip(a.adjacency, b.adjacency, strict=True)
    )
    return Graph(a.n, adjacency, a.live, a.labels)
