"""Nice, extreme and Tutte sets, and the matching built from a nice set.

A set ``X`` is extreme when deleting it raises the multiplicity by ``|X|``,
Tutte when ``G - X`` has ``mult + |X|`` theta-critical components, and nice
(``|X| > 1``) when every pair of it raises the multiplicity by two. Maximal
nice sets are the maximal cliques of ``D_2``; the brute-force enumerators of
maximal extreme and Tutte sets are separate, capped entry points.
"""

import logging
import random
from collections.abc import Iterable, Iterator
from itertools import combinations

from src.algebra.algebraic import AlgebraicNumber
from src.algebra.polynomial import Polynomial, mul, sub
from src.errors import InvariantBreach, OracleCapError
from src.graphs.graph import Graph, VertexSet, bits, iter_bits, mask_of
from src.graphs.matching_polynomial import MatchPolyCache, matching_polynomial, mult

from .classify import c_theta, vertex_kind
from .models import NiceMatchingResult, SubsetCertificate, VertexKind
from .operators import d_graph, d_r_graph

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_VERTICES = 10
SUBSET_CERTIFICATE_LIMIT = 12
RANDOM_CERTIFICATE_SAMPLES = 256
PATH_ENUMERATION_LIMIT = 200_000


def _ensure_cache(g: Graph, cache: MatchPolyCache | None) -> MatchPolyCache:
    return cache if cache is not None else MatchPolyCache.for_graph(g)


def _as_mask(vertices: VertexSet | Iterable[int]) -> VertexSet:
    return vertices if isinstance(vertices, int) else mask_of(vertices)


def is_nice(
    g: Graph,
    theta: AlgebraicNumber,
    x: VertexSet | Iterable[int],
    cache: MatchPolyCache | None = None,
) -> bool:
    """Whether every pair of ``x`` raises the multiplicity by exactly two.

    Raises:
        ValueError: If ``x`` has fewer than two vertices or is not live.
    """
    mask = _as_mask(x)
    if mask.bit_count() < 2:
        msg = f"Niceness needs at least two vertices, got {bits(mask)}"
        raise ValueError(msg)
    g.restrict(mask)
    cache = _ensure_cache(g, cache)
    target = mult(theta, g, cache) + 2
    return all(
        mult(theta, g.delete_vertices((1 << u) | (1 << v)), cache) == target
        for u, v in combinations(iter_bits(mask), 2)
    )


def is_extreme(
    g: Graph,
    theta: AlgebraicNumber,
    x: VertexSet | Iterable[int],
    cache: MatchPolyCache | None = None,
) -> bool:
    """Whether ``mult(theta, G - X) == mult(theta, G) + |X|``."""
    mask = _as_mask(x)
    if not mask:
        msg = "Extreme sets must be nonempty"
        raise ValueError(msg)
    cache = _ensure_cache(g, cache)
    gap = mult(theta, g.delete_vertices(mask), cache) - mult(theta, g, cache)
    return gap == mask.bit_count()


def is_tutte(
    g: Graph,
    theta: AlgebraicNumber,
    x: VertexSet | Iterable[int],
    cache: MatchPolyCache | None = None,
) -> bool:
    """Whether ``G - X`` has ``mult(theta, G) + |X|`` theta-critical components."""
    mask = _as_mask(x)
    if not mask:
        msg = "Tutte sets must be nonempty"
        raise ValueError(msg)
    cache = _ensure_cache(g, cache)
    target = mult(theta, g, cache) + mask.bit_count()
    return c_theta(g.delete_vertices(mask), theta, cache) == target


def maximal_nice_sets(
    g: Graph, theta: AlgebraicNumber, cache: MatchPolyCache | None = None
) -> list[VertexSet]:
    """Maximal cliques of ``D_2`` with at least two vertices."""
    d2 = d_r_graph(g, theta, 2, cache)
    return [c for c in d2.maximal_cliques() if c.bit_count() > 1]


def _maximal(family: list[VertexSet]) -> list[VertexSet]:
    """Inclusion-maximal members, ordered like :meth:`Graph.maximal_cliques`."""
    result = [
        s for s in family if not any(t != s and s & t == s for t in family)
    ]
    result.sort(key=bits)
    return result


def _nonempty_subsets(g: Graph, max_vertices: int) -> Iterator[VertexSet]:
    if g.order > max_vertices:
        msg = f"Subset enumeration refused: {g.order} > {max_vertices} vertices"
        raise OracleCapError(msg)
    vertices = g.vertices()
    for size in range(1, len(vertices) + 1):
        for chosen in combinations(vertices, size):
            yield mask_of(chosen)


def maximal_extreme_sets_bruteforce(
    g: Graph,
    theta: AlgebraicNumber,
    cache: MatchPolyCache | None = None,
    max_vertices: int = BRUTEFORCE_MAX_VERTICES,
) -> list[VertexSet]:
    """Maximal extreme sets with at least two vertices, over all subsets.

    Raises:
        OracleCapError: If ``g`` has more than ``max_vertices`` vertices.
    """
    cache = _ensure_cache(g, cache)
    family = [
        s for s in _nonempty_subsets(g, max_vertices) if is_extreme(g, theta, s, cache)
    ]
    return [s for s in _maximal(family) if s.bit_count() > 1]


def maximal_tutte_sets_bruteforce(
    g: Graph,
    theta: AlgebraicNumber,
    cache: MatchPolyCache | None = None,
    max_vertices: int = BRUTEFORCE_MAX_VERTICES,
) -> list[VertexSet]:
    """Maximal Tutte sets with at least two vertices, over all subsets.

    Raises:
        OracleCapError: If ``g`` has more than ``max_vertices`` vertices.
    """
    cache = _ensure_cache(g, cache)
    family = [
        s for s in _nonempty_subsets(g, max_vertices) if is_tutte(g, theta, s, cache)
    ]
    return [s for s in _maximal(family) if s.bit_count() > 1]


# -- constructive matching ----------------------------------------------------


def _essential_partner(
    g: Graph, theta: AlgebraicNumber, x: int, cache: MatchPolyCache
) -> int | None:
    """Least neighbour of ``x`` that is essential in ``G - x``."""
    rest = g.delete_vertices(1 << x)
    for y in iter_bits(g.neighbors(x)):
        if vertex_kind(rest, theta, y, cache) is VertexKind.ESSENTIAL:
            return y
    return None


def _sub_matchings(
    m: int, limit: int, samples: int, seed: int
) -> list[tuple[int, ...]]:
    if m <= limit:
        return [c for size in range(m + 1) for c in combinations(range(m), size)]
    rng = random.Random(seed)  # noqa: S311
    chosen = {tuple(i for i in range(m) if rng.random() < 0.5) for _ in range(samples)}
    return sorted(chosen, key=lambda c: (len(c), c))


def nice_matching(
    g: Graph,
    theta: AlgebraicNumber,
    x: VertexSet | Iterable[int],
    cache: MatchPolyCache | None = None,
    certificate_limit: int = SUBSET_CERTIFICATE_LIMIT,
    certificate_samples: int = RANDOM_CERTIFICATE_SAMPLES,
    seed: int = 0,
) -> NiceMatchingResult:
    """Match each vertex of the nice set ``x`` to an essential partner.

    The lowest remaining ``x_i`` is matched to its least neighbour that is
    essential once ``x_i`` is deleted; both are removed and the rest of ``x``
    is matched inside what remains. Every sub-matching ``M'`` then gets a
    certificate that deleting ``V(M')`` keeps the multiplicity, exhaustively
    up to ``certificate_limit`` pairs and by seeded sampling beyond.

    Raises:
        ValueError: If ``x`` is not nice in ``g``.
        InvariantBreach: If some ``x_i`` has no essential partner.
    """
    mask = _as_mask(x)
    cache = _ensure_cache(g, cache)
    if not is_nice(g, theta, mask, cache):
        msg = f"{bits(mask)} is not a theta-nice set"
        raise ValueError(msg)

    pairs: list[tuple[int, int]] = []
    current = g
    for xi in iter_bits(mask):
        yi = _essential_partner(current, theta, xi, cache)
        if yi is None:
            msg = f"Vertex {xi} has no essential neighbour after its deletion"
            raise InvariantBreach(
                msg,
                witness={
                    "x": xi,
                    "live": bits(current.live),
                    "pairs": [list(p) for p in pairs],
                },
            )
        pairs.append((xi, yi))
        current = current.delete_vertices((1 << xi) | (1 << yi))

    y_set = mask_of(y for _, y in pairs)
    base = mult(theta, g, cache)
    certificates = []
    subsets = _sub_matchings(len(pairs), certificate_limit, certificate_samples, seed)
    for chosen in subsets:
        removed = mask_of(v for i in chosen for v in pairs[i])
        rest = g.delete_vertices(removed)
        residual = mask & ~removed
        certificates.append(
            SubsetCertificate(
                pairs=chosen,
                expected=base,
                actual=mult(theta, rest, cache),
                residual_nice=(
                    is_nice(rest, theta, residual, cache)
                    if residual.bit_count() >= 2
                    else None
                ),
            )
        )
    result = NiceMatchingResult(
        pairs=tuple(pairs),
        x_set=mask,
        y_set=y_set,
        certificates=tuple(certificates),
        exhaustive=len(pairs) <= certificate_limit,
    )
    logger.debug(
        f"Nice matching for {bits(mask)}: {pairs}, "
        f"{len(certificates)} certificates, certified={result.certified}"
    )
    return result


def matching_faults(g: Graph, result: NiceMatchingResult) -> list[str]:
    """Structural defects of a nice matching, empty when there are none.

    Every pair must be an edge of ``g`` and the partners must be distinct,
    pairwise non-adjacent and outside ``X``; ``X`` and ``Y`` must be exactly
    the two sides of the pairs.
    """
    xs = [x for x, _ in result.pairs]
    ys = [y for _, y in result.pairs]
    faults = []
    if len(set(xs)) != len(xs) or mask_of(xs) != result.x_set:
        faults.append("x-side-mismatch")
    if len(set(ys)) != len(ys):
        faults.append("repeated-partner")
    if mask_of(ys) != result.y_set:
        faults.append("y-side-mismatch")
    if not all(g.has_edge(x, y) for x, y in result.pairs):
        faults.append("pair-not-edge")
    if not g.is_independent(result.y_set):
        faults.append("partners-adjacent")
    if result.y_set & result.x_set:
        faults.append("partner-in-x")
    return faults


def embed_check(
    g: Graph,
    theta: AlgebraicNumber,
    result: NiceMatchingResult,
    cache: MatchPolyCache | None = None,
) -> bool:
    """Whether swapping each ``x_i`` with ``y_i`` maps ``G[X | Y]`` into ``D_theta``."""
    swap: dict[int, int] = {}
    for xi, yi in result.pairs:
        swap[xi], swap[yi] = yi, xi
    d = d_graph(g, theta, cache)
    induced = g.restrict(result.x_set | result.y_set)
    return all(d.has_edge(swap[a], swap[b]) for a, b in induced.edges())


# -- paths --------------------------------------------------------------------


def bounded_paths(
    g: Graph, u: int, v: int, limit: int = PATH_ENUMERATION_LIMIT
) -> list[tuple[int, ...]]:
    """All simple ``u``-``v`` paths, refusing past ``limit`` of them.

    Raises:
        OracleCapError: If there are more than ``limit`` paths.
    """
    paths: list[tuple[int, ...]] = []
    for path in g.paths_between(u, v):
        if len(paths) == limit:
            msg = f"Path enumeration refused: more than {limit} paths from {u} to {v}"
            raise OracleCapError(msg)
        paths.append(path)
    return paths


def heilmann_lieb_sides(
    g: Graph,
    u: int,
    v: int,
    cache: MatchPolyCache | None = None,
    limit: int = PATH_ENUMERATION_LIMIT,
) -> tuple[Polynomial, Polynomial]:
    """Both sides of ``mu(G-u) mu(G-v) - mu(G) mu(G-u-v) = sum_P mu(G-P)^2``."""
    cache = _ensure_cache(g, cache)

    def mu(view: Graph) -> Polynomial:
        return matching_polynomial(view, cache)

    lhs = sub(
        mul(mu(g.delete_vertices(1 << u)), mu(g.delete_vertices(1 << v))),
        mul(mu(g), mu(g.delete_vertices((1 << u) | (1 << v)))),
    )
    rhs = Polynomial()
    for path in bounded_paths(g, u, v, limit):
        rest = mu(g.delete_vertices(mask_of(path)))
        rhs = rhs + mul(rest, rest)
    return lhs, rhs


def heilmann_lieb_check(
    g: Graph,
    u: int,
    v: int,
    cache: MatchPolyCache | None = None,
    limit: int = PATH_ENUMERATION_LIMIT,
) -> bool:
    lhs, rhs = heilmann_lieb_sides(g, u, v, cache, limit)
    return lhs == rhs


def path_criterion(
    g: Graph,
    theta: AlgebraicNumber,
    u: int,
    v: int,
    cache: MatchPolyCache | None = None,
    limit: int = PATH_ENUMERATION_LIMIT,
) -> bool:
    """Whether some ``u``-``v`` path ``P`` has ``mult(G - P) <= mult(G)``."""
    cache = _ensure_cache(g, cache)
    base = mult(theta, g, cache)
    return any(
        mult(theta, g.delete_vertices(mask_of(path)), cache) <= base
        for path in bounded_paths(g, u, v, limit)
    )
