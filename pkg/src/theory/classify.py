"""Vertex classification and the theta-Gallai-Edmonds decomposition.

Deleting a vertex changes ``mult(theta, G)`` by -1, 0 or +1, which makes it
essential, neutral or positive. Non-essential vertices next to an essential
one are special and form ``A``. Every component of ``G - A`` is either
theta-critical or free of the root.

All queries on one graph share a :class:`MatchPolyCache`; the ``n + 1``
vertex-deleted subgraphs reuse most recursion states.
"""

import logging

from src.algebra.algebraic import AlgebraicNumber
from src.errors import InvariantBreach
from src.graphs.graph import Graph, VertexSet, iter_bits
from src.graphs.matching_polynomial import MatchPolyCache, mult

from .models import ThetaDecomposition, VertexClass, VertexKind

logger = logging.getLogger(__name__)


def _ensure_cache(g: Graph, cache: MatchPolyCache | None) -> MatchPolyCache:
    return cache if cache is not None else MatchPolyCache.for_graph(g)


def vertex_kind(
    g: Graph, theta: AlgebraicNumber, v: int, cache: MatchPolyCache | None = None
) -> VertexKind:
    """Essential, neutral or positive according to ``mult(G - v) - mult(G)``.

    Raises:
        ValueError: If ``v`` is not live.
        InvariantBreach: If the shift leaves ``{-1, 0, 1}``.
    """
    cache = _ensure_cache(g, cache)
    base = mult(theta, g, cache)
    shift = mult(theta, g.delete_vertices(1 << v), cache) - base
    try:
        return VertexKind.from_shift(shift)
    except KeyError:
        msg = f"Deleting vertex {v} shifted the multiplicity of {theta} by {shift}"
        raise InvariantBreach(
            msg, witness={"vertex": v, "theta": theta.to_json(), "shift": shift}
        ) from None


def classify_vertices(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> dict[int, VertexKind]:
    cache = _ensure_cache(g, cache)
    return {v: vertex_kind(g, theta, v, cache) for v in g.vertices()}


def vertex_class(
    g: Graph, theta: AlgebraicNumber, v: int, cache: MatchPolyCache | None = None
) -> VertexClass:
    """Kind of ``v`` together with its special flag."""
    cache = _ensure_cache(g, cache)
    kind = vertex_kind(g, theta, v, cache)
    if kind is VertexKind.ESSENTIAL:
        return VertexClass(kind)
    special = any(
        vertex_kind(g, theta, w, cache) is VertexKind.ESSENTIAL
        for w in iter_bits(g.neighbors(v))
    )
    return VertexClass(kind, special)


def decomposition(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> ThetaDecomposition:
    """Partition the live vertices of ``g`` into ``B``, ``A``, ``N`` and ``P``.

    Components of ``G - A`` are sorted by their lowest vertex and split by
    whether theta is a root of their matching polynomial.
    """
    cache = _ensure_cache(g, cache)
    base = mult(theta, g, cache)
    kinds = classify_vertices(g, theta, cache)

    masks: dict[VertexKind, VertexSet] = dict.fromkeys(VertexKind, 0)
    for v, kind in kinds.items():
        masks[kind] |= 1 << v
    essential = masks[VertexKind.ESSENTIAL]

    special = 0
    if base > 0:
        for v in iter_bits(g.live & ~essential):
            if g.neighbors(v) & essential:
                special |= 1 << v

    criticals: list[VertexSet] = []
    rootfree: list[VertexSet] = []
    below = g.delete_vertices(special)
    for component in below.components():
        if mult(theta, g.restrict(component), cache) > 0:
            criticals.append(component)
        else:
            rootfree.append(component)

    result = ThetaDecomposition(
        theta=theta,
        base_mult=base,
        essential=essential,
        special=special,
        neutral=masks[VertexKind.NEUTRAL] & ~special,
        positive=masks[VertexKind.POSITIVE] & ~special,
        criticals=tuple(criticals),
        rootfree=tuple(rootfree),
        kinds=kinds,
    )
    logger.debug(
        f"Decomposition at {theta}: mult={base}, |B|={essential.bit_count()}, "
        f"|A|={special.bit_count()}, {len(criticals)} critical and "
        f"{len(rootfree)} root-free components"
    )
    return result


def is_theta_critical(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> bool:
    """Whether the connected graph ``g`` has every vertex essential.

    Raises:
        ValueError: If ``g`` is empty or disconnected.
    """
    if not g.live or not g.is_connected():
        msg = "theta-criticality is defined for connected graphs only"
        raise ValueError(msg)
    cache = _ensure_cache(g, cache)
    return all(
        vertex_kind(g, theta, v, cache) is VertexKind.ESSENTIAL for v in g.vertices()
    )


def c_theta(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> int:
    """Number of theta-critical components of ``g`` itself."""
    cache = _ensure_cache(g, cache)
    return sum(
        is_theta_critical(g.restrict(component), theta, cache)
        for component in g.components()
    )
