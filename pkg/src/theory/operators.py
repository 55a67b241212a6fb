"""Pair-deletion graphs ``D_r``, ``D_theta``, ``S_theta`` and their closed forms.

``D_r(G)`` joins ``u`` and ``v`` when ``mult(theta, G - u - v)`` equals
``mult(theta, G) + r``. ``D_theta(G)`` collects the shifts ``r <= 0`` and its
complement ``G_plus`` the shifts ``1`` and ``2``. ``S_theta(G)`` joins every
special vertex to all other vertices; it has the same decomposition as ``G``.

The ``*_closed_form*`` builders rebuild these graphs from the decomposition
alone plus recursive computations inside the components of ``G - A``. They
refuse with :class:`PremiseError` where no formula is known.

Usage:
    cache = MatchPolyCache.for_graph(g)
    bundle = d_graph_bundle(g, theta, cache)
    assert bundle.d_theta.same_induced(d_graph_closed_form(g, theta, cache))
"""

import logging
from collections.abc import Callable, Iterable

from src.algebra.algebraic import AlgebraicNumber
from src.errors import InvariantBreach, PremiseError
from src.graphs.graph import Graph, VertexSet, bits, iter_bits
from src.graphs.matching_polynomial import MatchPolyCache, mult

from .classify import decomposition
from .models import SHIFTS, DGraphBundle, ThetaDecomposition

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def _ensure_cache(g: Graph, cache: MatchPolyCache | None) -> MatchPolyCache:
    return cache if cache is not None else MatchPolyCache.for_graph(g)


def _check_shift(r: int) -> None:
    if r not in SHIFTS:
        msg = f"Shift r must be one of {list(SHIFTS)}, got {r}"
        raise ValueError(msg)


def graph_on(g: Graph, pairs: Iterable[Pair]) -> Graph:
    """Graph with the vertex set of ``g`` and exactly the given edges."""
    adjacency = [0] * g.n
    for u, v in pairs:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph(g.n, tuple(adjacency), g.live, g.labels)


def _pairs_where(g: Graph, keep: Callable[[int, int], bool]) -> list[Pair]:
    vertices = g.vertices()
    return [
        (u, v)
        for i, u in enumerate(vertices)
        for v in vertices[i + 1 :]
        if keep(u, v)
    ]


def pair_shifts(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> dict[Pair, int]:
    """``mult(theta, G - u - v) - mult(theta, G)`` for every pair ``u < v``.

    Raises:
        InvariantBreach: If a shift falls outside ``-2..2``.
    """
    cache = _ensure_cache(g, cache)
    base = mult(theta, g, cache)
    shifts: dict[Pair, int] = {}
    for u, v in _pairs_where(g, lambda u, v: True):
        shift = mult(theta, g.delete_vertices((1 << u) | (1 << v)), cache) - base
        if shift not in SHIFTS:
            msg = f"Deleting ({u}, {v}) shifted the multiplicity by {shift}"
            raise InvariantBreach(msg, witness={"pair": [u, v], "shift": shift})
        shifts[(u, v)] = shift
    return shifts


def d_r_graph(
    g: Graph, theta: AlgebraicNumber, r: int, cache: MatchPolyCache | None = None
) -> Graph:
    """Pairs whose joint deletion shifts the multiplicity by exactly ``r``."""
    _check_shift(r)
    shifts = pair_shifts(g, theta, cache)
    return graph_on(g, (pair for pair, shift in shifts.items() if shift == r))


def d_graph_bundle(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> DGraphBundle:
    """All five ``D_r`` graphs from one table of pair shifts."""
    shifts = pair_shifts(g, theta, cache)
    by_shift = {
        r: graph_on(g, (pair for pair, shift in shifts.items() if shift == r))
        for r in SHIFTS
    }
    return DGraphBundle(by_shift)


def d_graph(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> Graph:
    """Pairs ``u, v`` with ``mult(theta, G - u - v) <= mult(theta, G)``."""
    cache = _ensure_cache(g, cache)
    base = mult(theta, g, cache)
    return graph_on(
        g,
        _pairs_where(
            g,
            lambda u, v: mult(theta, g.delete_vertices((1 << u) | (1 << v)), cache)
            <= base,
        ),
    )


def s_graph(
    g: Graph,
    theta: AlgebraicNumber,
    cache: MatchPolyCache | None = None,
    decomp: ThetaDecomposition | None = None,
) -> Graph:
    """Join every special vertex of ``g`` to all other live vertices.

    The result is a new root graph, so it needs its own cache.
    """
    if decomp is None:
        decomp = decomposition(g, theta, cache)
    if not decomp.special:
        return g
    adjacency = list(g.adjacency)
    for w in iter_bits(decomp.special):
        adjacency[w] |= g.live & ~(1 << w)
        for z in iter_bits(g.live & ~(1 << w)):
            adjacency[z] |= 1 << w
    return Graph(g.n, tuple(adjacency), g.live, g.labels)


def same_gallai_edmonds(g: Graph, h: Graph, theta: AlgebraicNumber) -> bool:
    """Whether ``g`` and ``h`` have the same special set ``A`` and equal
    labelled graphs ``G - A`` and ``H - A``.
    """
    if g.live != h.live:
        return False
    a = decomposition(g, theta).special
    if decomposition(h, theta).special != a:
        return False
    return g.delete_vertices(a).same_induced(h.delete_vertices(a))


# -- closed forms -----------------------------------------------------------


def _inside(
    g: Graph,
    theta: AlgebraicNumber,
    components: Iterable[VertexSet],
    r: int,
    cache: MatchPolyCache,
) -> list[Pair]:
    """Edges of ``D_r`` computed inside each component separately."""
    pairs: list[Pair] = []
    for component in components:
        if component.bit_count() < 2:
            continue
        pairs.extend(d_r_graph(g.restrict(component), theta, r, cache).edges())
    return pairs


def _distinct(indexer: Callable[[int], int | None], u: int, v: int) -> bool:
    i, j = indexer(u), indexer(v)
    return i is not None and j is not None and i != j


def _between(x: VertexSet, y: VertexSet, u: int, v: int) -> bool:
    """Whether one of ``u, v`` lies in ``x`` and the other in ``y``."""
    return bool((x >> u & 1 and y >> v & 1) or (x >> v & 1 and y >> u & 1))


def d_graph_closed_form(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> Graph:
    """``D_theta(G)`` rebuilt from the decomposition.

    A pair is an edge when it meets ``B``, when it joins two neutral vertices
    of different root-free components, or when it is an edge of ``D_0`` of a
    root-free component.
    """
    cache = _ensure_cache(g, cache)
    dec = decomposition(g, theta, cache)
    n_set = dec.neutral

    def outer(u: int, v: int) -> bool:
        if (dec.essential >> u | dec.essential >> v) & 1:
            return True
        return bool(n_set >> u & n_set >> v & 1) and _distinct(
            dec.rootfree_index, u, v
        )

    pairs = set(_pairs_where(g, outer))
    pairs.update(_inside(g, theta, dec.rootfree, 0, cache))
    return graph_on(g, pairs)


def d_r_closed_form_on_S(
    g: Graph, theta: AlgebraicNumber, r: int, cache: MatchPolyCache | None = None
) -> Graph:
    """``D_r(S_theta(G))`` rebuilt from the decomposition of ``G``.

    Shifts ``-1`` and ``0`` need ``mult(theta, G) >= 2``; shift ``-2`` is
    empty below that and needs the same bound otherwise.

    Raises:
        PremiseError: If ``r`` is -1 or 0 and ``mult(theta, G) < 2``.
    """
    _check_shift(r)
    cache = _ensure_cache(g, cache)
    dec = decomposition(g, theta, cache)
    if r <= 0 and dec.base_mult < 2:
        if r == -2:
            return graph_on(g, [])
        msg = f"No closed form for D_{r} at mult(theta, G) = {dec.base_mult}"
        raise PremiseError(msg)

    b, a, n_set, p = dec.essential, dec.special, dec.neutral, dec.positive
    q_index = dec.rootfree_index

    def rule(u: int, v: int) -> bool:
        if r == -2:
            return _distinct(dec.critical_index, u, v)
        if r == -1:
            return _between(n_set, b, u, v)
        if r == 0:
            return _between(p | a, b, u, v) or (
                bool(n_set >> u & n_set >> v & 1) and _distinct(q_index, u, v)
            )
        if r == 1:
            return _between(a, n_set, u, v) or (
                _between(p, n_set, u, v) and _distinct(q_index, u, v)
            )
        return (
            bool(a >> u & a >> v & 1)
            or _between(a, p, u, v)
            or (bool(p >> u & p >> v & 1) and _distinct(q_index, u, v))
        )

    pairs = set(_pairs_where(g, rule))
    if r in (-1, 0):
        pairs.update(_inside(g, theta, dec.criticals, r, cache))
    if r in (0, 1, 2):
        pairs.update(_inside(g, theta, dec.rootfree, r, cache))
    logger.debug(f"Closed-form D_{r} on S has {len(pairs)} edges")
    return graph_on(g, pairs)


def _placement(dec: ThetaDecomposition, u: int, v: int) -> tuple[str, str]:
    def where(x: int) -> str:
        if dec.critical_index(x) is not None:
            return "H"
        if dec.rootfree_index(x) is not None:
            return "Q"
        return "A"

    return where(u), where(v)


def _component_mult(
    g: Graph,
    theta: AlgebraicNumber,
    component: VertexSet,
    removed: VertexSet,
    cache: MatchPolyCache,
) -> int:
    return mult(theta, g.restrict(component & ~removed), cache)


def s_c6_multiplicity(
    g: Graph,
    theta: AlgebraicNumber,
    u: int,
    v: int,
    cache: MatchPolyCache | None = None,
) -> int:
    """Predicted ``mult(theta, S_theta(G) - u - v)`` from the components of G - A.

    Raises:
        PremiseError: If ``u`` or ``v`` is special, or they lie in different
            critical components while ``mult(theta, G) < 2``.
    """
    if u == v:
        msg = f"Need two distinct vertices, got {u} twice"
        raise ValueError(msg)
    cache = _ensure_cache(g, cache)
    dec = decomposition(g, theta, cache)
    base = dec.base_mult
    pair = (1 << u) | (1 << v)
    kinds = _placement(dec, u, v)

    if kinds == ("H", "Q") or kinds == ("Q", "H"):
        q_vertex = v if kinds[1] == "Q" else u
        component = dec.rootfree[dec.rootfree_index(q_vertex)]
        return base - 1 + _component_mult(g, theta, component, 1 << q_vertex, cache)
    if kinds == ("Q", "Q"):
        return c3b_multiplicity(g, theta, u, v, cache, decomp=dec)
    if kinds == ("H", "H"):
        i, j = dec.critical_index(u), dec.critical_index(v)
        if i == j:
            component = dec.criticals[i]
            return base - 1 + _component_mult(g, theta, component, pair, cache)
        if base >= 2:
            return base - 2
        msg = f"{u} and {v} lie in different critical components at mult {base}"
        raise PremiseError(msg)
    msg = f"No multiplicity formula covers the special vertices in {bits(pair)}"
    raise PremiseError(msg)


def c3b_multiplicity(
    g: Graph,
    theta: AlgebraicNumber,
    u: int,
    v: int,
    cache: MatchPolyCache | None = None,
    decomp: ThetaDecomposition | None = None,
) -> int:
    """Predicted ``mult(theta, G - u - v)`` for ``u, v`` in root-free components.

    The same value holds in ``S_theta(G)``.

    Raises:
        PremiseError: If ``u`` or ``v`` is outside the root-free components.
    """
    cache = _ensure_cache(g, cache)
    dec = decomp if decomp is not None else decomposition(g, theta, cache)
    i, j = dec.rootfree_index(u), dec.rootfree_index(v)
    if i is None or j is None:
        msg = f"Vertices {u} and {v} are not both in root-free components"
        raise PremiseError(msg)
    if i == j:
        pair = (1 << u) | (1 << v)
        return dec.base_mult + _component_mult(g, theta, dec.rootfree[i], pair, cache)
    return (
        dec.base_mult
        + _component_mult(g, theta, dec.rootfree[i], 1 << u, cache)
        + _component_mult(g, theta, dec.rootfree[j], 1 << v, cache)
    )
