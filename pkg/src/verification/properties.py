"""The registered properties.

Each check returns the list of failures it found, one witness dict per
offending vertex, pair, subset or path. Importing this module fills
:data:`src.verification.registry.PROPERTIES`.
"""

import logging
from collections.abc import Callable
from itertools import combinations

from src.algebra.algebraic import negate
from src.errors import PremiseError
from src.graphs.graph import Graph, bits, iter_bits, mask_of
from src.graphs.matching_polynomial import (
    MatchPolyCache,
    derivative_identity_holds,
    edge_recurrence_holds,
    matching_polynomial,
    matching_polynomial_oracle,
    mult,
)
from src.theory.classify import classify_vertices, decomposition, is_theta_critical
from src.theory.models import SHIFTS, ThetaDecomposition, VertexKind
from src.theory.operators import (
    c3b_multiplicity,
    d_graph,
    d_graph_bundle,
    d_graph_closed_form,
    d_r_closed_form_on_S,
    d_r_graph,
    s_c6_multiplicity,
)
from src.theory.tutte_sets import (
    embed_check,
    heilmann_lieb_sides,
    is_extreme,
    is_nice,
    is_tutte,
    matching_faults,
    maximal_extreme_sets_bruteforce,
    maximal_nice_sets,
    maximal_tutte_sets_bruteforce,
    path_criterion,
)

from .registry import Premise, PropertyContext, Witness, register

logger = logging.getLogger(__name__)

ESSENTIAL = VertexKind.ESSENTIAL
NEUTRAL = VertexKind.NEUTRAL
POSITIVE = VertexKind.POSITIVE

# Allowed shift ranges for a pair with the given first vertex
SHIFT_RANGE = {ESSENTIAL: (-2, 0), NEUTRAL: (-1, 1), POSITIVE: (0, 2)}


def _pairs(g: Graph) -> list[tuple[int, int]]:
    return list(combinations(g.vertices(), 2))


def _pair_mask(u: int, v: int) -> int:
    return (1 << u) | (1 << v)


def _subsets(g: Graph, min_size: int) -> list[int]:
    vertices = g.vertices()
    return [
        mask_of(chosen)
        for size in range(min_size, len(vertices) + 1)
        for chosen in combinations(vertices, size)
    ]


def _edge_diff(expected: Graph, actual: Graph) -> Witness | None:
    want, got = set(expected.edges()), set(actual.edges())
    if want == got:
        return None
    return {
        "missing": [list(e) for e in sorted(want - got)],
        "extra": [list(e) for e in sorted(got - want)],
    }


def _classes(dec: ThetaDecomposition) -> dict[str, list[int]]:
    return {
        "B": bits(dec.essential),
        "A": bits(dec.special),
        "N": bits(dec.neutral),
        "P": bits(dec.positive),
    }


# -- matching polynomial ------------------------------------------------------


@register(
    "mu-oracle",
    Premise.GRAPH,
    "Recurrence matches brute-force matching counts",
    cap="oracle_max_vertices",
)
def mu_oracle(ctx: PropertyContext) -> list[Witness]:
    actual = matching_polynomial(ctx.g, ctx.cache)
    expected = matching_polynomial_oracle(ctx.g, ctx.config.oracle_max_vertices)
    if actual == expected:
        return []
    return [{"expected": expected.to_json(), "actual": actual.to_json()}]


@register("edge-recurrence", Premise.GRAPH, "mu(G) = mu(G - e) - mu(G - u - v)")
def edge_recurrence(ctx: PropertyContext) -> list[Witness]:
    return [
        {"edge": [u, v]}
        for u, v in ctx.g.edges()
        if not edge_recurrence_holds(ctx.g, u, v, ctx.cache)
    ]


@register(
    "derivative-identity", Premise.GRAPH, "Derivative of mu(G) is the sum of mu(G - v)"
)
def derivative_identity(ctx: PropertyContext) -> list[Witness]:
    if derivative_identity_holds(ctx.g, ctx.cache):
        return []
    return [{"polynomial": matching_polynomial(ctx.g, ctx.cache).to_json()}]


@register(
    "sign-parity", Premise.GRAPH, "Coefficients alternate in sign on every other degree"
)
def sign_parity(ctx: PropertyContext) -> list[Witness]:
    coeffs = matching_polynomial(ctx.g, ctx.cache).coeffs
    n = ctx.g.order
    failures = []
    for degree, c in enumerate(coeffs):
        gap = n - degree
        if gap % 2:
            ok = c == 0
        else:
            ok = c == 0 or (c > 0) == (gap // 2 % 2 == 0)
        if not ok:
            failures.append({"degree": degree, "coefficient": c})
    return failures


@register(
    "heilmann-lieb",
    Premise.GRAPH,
    "Path identity for mu(G - u) mu(G - v) - mu(G) mu(G - u - v)",
    cap="bruteforce_max_vertices",
)
def heilmann_lieb(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for u, v in _pairs(ctx.g):
        lhs, rhs = heilmann_lieb_sides(
            ctx.g, u, v, ctx.cache, ctx.config.path_enumeration_limit
        )
        if lhs != rhs:
            failures.append(
                {"pair": [u, v], "expected": lhs.to_json(), "actual": rhs.to_json()}
            )
    return failures


@register("theta-symmetry", Premise.ANY, "mult(theta, G) = mult(-theta, G)")
def theta_symmetry(ctx: PropertyContext) -> list[Witness]:
    mirrored = mult(negate(ctx.t), ctx.g, ctx.cache)
    if mirrored == ctx.base:
        return []
    return [{"expected": ctx.base, "actual": mirrored}]


@register("interlacing", Premise.ANY, "Deleting one vertex moves mult by at most one")
def interlacing(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for v in ctx.g.vertices():
        after = ctx.mult_without(1 << v)
        if abs(after - ctx.base) > 1:
            failures.append({"vertex": v, "expected": ctx.base, "actual": after})
    return failures


@register(
    "path-interlacing",
    Premise.ROOT,
    "Deleting a path lowers mult by at most one",
    cap="bruteforce_max_vertices",
)
def path_interlacing(ctx: PropertyContext) -> list[Witness]:
    return [
        {"path": list(path), "expected": ctx.base - 1, "actual": after}
        for path, after in ctx.path_mults.items()
        if after < ctx.base - 1
    ]


@register(
    "essential-path-endpoints",
    Premise.ROOT,
    "A path whose deletion lowers mult ends in essential vertices",
    cap="bruteforce_max_vertices",
)
def essential_path_endpoints(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for path, after in ctx.path_mults.items():
        if after != ctx.base - 1:
            continue
        ends = (path[0], path[-1])
        if any(ctx.kinds[e] is not ESSENTIAL for e in ends):
            failures.append(
                {"path": list(path), "kinds": [str(ctx.kinds[e]) for e in ends]}
            )
    return failures


# -- classification -----------------------------------------------------------


@register(
    "decomposition-structure",
    Premise.ROOT,
    "B, A, N, P partition V and G - A splits into critical and root-free parts",
)
def decomposition_structure(ctx: PropertyContext) -> list[Witness]:
    g, dec = ctx.g, ctx.decomp
    failures: list[Witness] = []
    parts = (dec.essential, dec.special, dec.neutral, dec.positive)
    union = 0
    for part in parts:
        if union & part:
            failures.append({"overlap": bits(union & part), "classes": _classes(dec)})
        union |= part
    if union != g.live:
        failures.append({"uncovered": bits(g.live & ~union)})

    below = sorted(g.delete_vertices(dec.special).components())
    listed = sorted(dec.criticals + dec.rootfree)
    if below != listed:
        failures.append(
            {"expected": [bits(c) for c in below], "actual": [bits(c) for c in listed]}
        )
    for component in dec.criticals:
        part = g.restrict(component)
        k = mult(ctx.t, part, ctx.cache)
        if k != 1 or not is_theta_critical(part, ctx.t, ctx.cache):
            failures.append({"critical": bits(component), "mult": k})
    for component in dec.rootfree:
        k = mult(ctx.t, g.restrict(component), ctx.cache)
        if k != 0:
            failures.append({"rootfree": bits(component), "mult": k})

    expected_count = dec.special.bit_count() + ctx.base
    if len(dec.criticals) != expected_count:
        failures.append(
            {"critical_count": len(dec.criticals), "expected": expected_count}
        )
    covered = 0
    for component in dec.criticals:
        covered |= component
    if covered != dec.essential:
        failures.append({"B": bits(dec.essential), "criticals": bits(covered)})
    return failures


@register("gallai", Premise.ANY, "A theta-critical component has mult exactly one")
def gallai(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for component in ctx.g.components():
        part = ctx.g.restrict(component)
        if is_theta_critical(part, ctx.t, ctx.cache):
            k = mult(ctx.t, part, ctx.cache)
            if k != 1:
                failures.append({"component": bits(component), "mult": k})
    return failures


@register(
    "stability", Premise.ROOT, "Deleting a special vertex leaves B, N and P in place"
)
def stability(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    failures = []
    for u in iter_bits(dec.special):
        after = decomposition(ctx.g.delete_vertices(1 << u), ctx.t, ctx.cache)
        if (
            after.essential != dec.essential
            or after.neutral != dec.neutral
            or after.positive != dec.positive
            or after.special != dec.special & ~(1 << u)
        ):
            failures.append(
                {"vertex": u, "expected": _classes(dec), "actual": _classes(after)}
            )
    return failures


@register("special-positive", Premise.ROOT, "Every special vertex is positive")
def special_positive(ctx: PropertyContext) -> list[Witness]:
    return [
        {"vertex": u, "kind": str(ctx.kinds[u])}
        for u in iter_bits(ctx.decomp.special)
        if ctx.kinds[u] is not POSITIVE
    ]


@register(
    "essential-neighbor",
    Premise.ROOT,
    "A non-essential vertex is positive iff a neighbour is essential once it goes",
)
def essential_neighbor(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for u, kind in ctx.kinds.items():
        if kind is ESSENTIAL:
            continue
        rest = ctx.g.delete_vertices(1 << u)
        after = classify_vertices(rest, ctx.t, ctx.cache)
        has_essential = any(
            after[w] is ESSENTIAL for w in iter_bits(ctx.g.neighbors(u))
        )
        if has_essential != (kind is POSITIVE):
            failures.append(
                {"vertex": u, "kind": str(kind), "essential_neighbor": has_essential}
            )
    return failures


@register(
    "neutral-neighbor",
    Premise.NONZERO_ROOT,
    "An essential vertex has a neighbour that is neutral once it goes",
)
def neutral_neighbor(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for u, kind in ctx.kinds.items():
        if kind is not ESSENTIAL:
            continue
        after = classify_vertices(ctx.g.delete_vertices(1 << u), ctx.t, ctx.cache)
        if not any(after[w] is NEUTRAL for w in iter_bits(ctx.g.neighbors(u))):
            failures.append({"vertex": u, "neighbors": bits(ctx.g.neighbors(u))})
    return failures


@register("existence", Premise.ROOT, "A root always has an essential vertex")
def existence(ctx: PropertyContext) -> list[Witness]:
    if ctx.decomp.essential:
        return []
    return [{"mult": ctx.base, "classes": _classes(ctx.decomp)}]


@register("no-zero-neutral", Premise.ZERO, "No vertex is neutral at theta = 0")
def no_zero_neutral(ctx: PropertyContext) -> list[Witness]:
    return [{"vertex": v} for v, kind in ctx.kinds.items() if kind is NEUTRAL]


@register(
    "delete-special",
    Premise.ROOT,
    "G - A has no special vertices and the same B, N and P",
)
def delete_special(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    after = decomposition(ctx.g.delete_vertices(dec.special), ctx.t, ctx.cache)
    if (
        after.special
        or after.essential != dec.essential
        or after.neutral != dec.neutral
        or after.positive != dec.positive
    ):
        return [{"expected": _classes(dec), "actual": _classes(after)}]
    return []


def _deletion_moves(
    ctx: PropertyContext, kind: VertexKind, allowed: dict[VertexKind, set[VertexKind]]
) -> list[Witness]:
    failures = []
    for u, k in ctx.kinds.items():
        if k is not kind:
            continue
        after = classify_vertices(ctx.g.delete_vertices(1 << u), ctx.t, ctx.cache)
        for v, new in after.items():
            old = ctx.kinds[v]
            if old in allowed and new not in allowed[old]:
                failures.append(
                    {"deleted": u, "vertex": v, "before": str(old), "after": str(new)}
                )
    return failures


@register(
    "positive-deletion",
    Premise.ANY,
    "Deleting a positive vertex never demotes essential or neutral vertices",
)
def positive_deletion(ctx: PropertyContext) -> list[Witness]:
    allowed = {
        ESSENTIAL: {ESSENTIAL},
        NEUTRAL: {ESSENTIAL, NEUTRAL},
    }
    if ctx.base >= 1:
        allowed[POSITIVE] = {ESSENTIAL, POSITIVE}
    return _deletion_moves(ctx, POSITIVE, allowed)


@register(
    "neutral-deletion",
    Premise.ANY,
    "Deleting a neutral vertex keeps essential vertices and never adds new ones",
)
def neutral_deletion(ctx: PropertyContext) -> list[Witness]:
    allowed = {
        POSITIVE: {POSITIVE, NEUTRAL},
        ESSENTIAL: {ESSENTIAL},
        NEUTRAL: {NEUTRAL, POSITIVE},
    }
    return _deletion_moves(ctx, NEUTRAL, allowed)


# -- pair graphs --------------------------------------------------------------


@register("d-partition", Premise.ANY, "The five D_r graphs partition all pairs")
def d_partition(ctx: PropertyContext) -> list[Witness]:
    seen: dict[tuple[int, int], int] = {}
    failures: list[Witness] = []
    for r in SHIFTS:
        for e in ctx.bundle[r].edges():
            if e in seen:
                failures.append({"pair": list(e), "shifts": [seen[e], r]})
            seen[e] = r
    missing = [list(e) for e in _pairs(ctx.g) if e not in seen]
    if missing:
        failures.append({"missing": missing})
    return failures


@register("d-symmetry", Premise.ANY, "D_r at theta equals D_r at -theta")
def d_symmetry(ctx: PropertyContext) -> list[Witness]:
    mirrored = d_graph_bundle(ctx.g, negate(ctx.t), ctx.cache)
    failures = []
    for r in SHIFTS:
        diff = _edge_diff(ctx.bundle[r], mirrored[r])
        if diff is not None:
            failures.append({"r": r, **diff})
    return failures


@register("odd-shifts-zero", Premise.ZERO, "D_-1 and D_1 are empty at theta = 0")
def odd_shifts_zero(ctx: PropertyContext) -> list[Witness]:
    return [
        {"r": r, "pairs": [list(e) for e in ctx.bundle[r].edges()]}
        for r in (-1, 1)
        if ctx.bundle[r].edges()
    ]


@register(
    "d-complement",
    Premise.ANY,
    "The complement of D_theta is D_1 + D_2 and D_theta matches its definition",
)
def d_complement(ctx: PropertyContext) -> list[Witness]:
    failures = []
    diff = _edge_diff(ctx.bundle.g_plus, ctx.bundle.d_theta.complement())
    if diff is not None:
        failures.append({"check": "complement", **diff})
    diff = _edge_diff(ctx.bundle.d_theta, d_graph(ctx.g, ctx.t, ctx.cache))
    if diff is not None:
        failures.append({"check": "definition", **diff})
    return failures


@register(
    "s-stability",
    Premise.ROOT,
    "S_theta(G) has the same multiplicity and decomposition as G",
)
def s_stability(ctx: PropertyContext) -> list[Witness]:
    s_mult = mult(ctx.t, ctx.s, ctx.s_cache)
    after = decomposition(ctx.s, ctx.t, ctx.s_cache)
    dec = ctx.decomp
    if (
        s_mult == ctx.base
        and after.essential == dec.essential
        and after.special == dec.special
        and after.neutral == dec.neutral
        and after.positive == dec.positive
        and after.same_partition(dec)
    ):
        return []
    return [
        {
            "expected": {"mult": ctx.base, **_classes(dec)},
            "actual": {"mult": s_mult, **_classes(after)},
        }
    ]


@register(
    "d-stability",
    Premise.ROOT,
    "D_theta(S_theta(G)) equals D_theta(G) and its complement is D_1 + D_2 of G",
)
def d_stability(ctx: PropertyContext) -> list[Witness]:
    on_s = d_graph(ctx.s, ctx.t, ctx.s_cache)
    failures = []
    diff = _edge_diff(ctx.bundle.d_theta, on_s)
    if diff is not None:
        failures.append({"check": "stability", **diff})
    diff = _edge_diff(ctx.bundle.g_plus, on_s.complement())
    if diff is not None:
        failures.append({"check": "complement", **diff})
    return failures


@register(
    "edge-addition",
    Premise.ROOT,
    "Adding an edge at a special vertex keeps mult and every class",
)
def edge_addition(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    failures = []
    for u in iter_bits(dec.special):
        for v in iter_bits(ctx.g.live & ~ctx.g.neighbors(u) & ~(1 << u)):
            grown = ctx.g.add_edge(u, v)
            cache = MatchPolyCache.for_graph(grown, ctx.config.cache_max_entries)
            after = decomposition(grown, ctx.t, cache)
            if after.base_mult != ctx.base or _classes(after) != _classes(dec):
                failures.append(
                    {
                        "edge": [u, v],
                        "expected": {"mult": ctx.base, **_classes(dec)},
                        "actual": {"mult": after.base_mult, **_classes(after)},
                    }
                )
    return failures


@register(
    "closed-form-d",
    Premise.ANY,
    "D_theta(G) rebuilt from the decomposition",
    informational_when=lambda ctx: ctx.base <= 1,
)
def closed_form_d(ctx: PropertyContext) -> list[Witness]:
    diff = _edge_diff(ctx.bundle.d_theta, d_graph_closed_form(ctx.g, ctx.t, ctx.cache))
    return [] if diff is None else [diff]


def _closed_form_s(r: int) -> Callable[[PropertyContext], list[Witness]]:
    def check(ctx: PropertyContext) -> list[Witness]:
        direct = d_r_graph(ctx.s, ctx.t, r, ctx.s_cache)
        rebuilt = d_r_closed_form_on_S(ctx.g, ctx.t, r, ctx.cache)
        diff = _edge_diff(direct, rebuilt)
        return [] if diff is None else [{"r": r, **diff}]

    return check


for _r in SHIFTS:
    register(
        f"closed-form-s-r{_r}",
        Premise.MULT_TWO if _r in (-1, 0) else Premise.ANY,
        f"D_{_r}(S_theta(G)) rebuilt from the decomposition of G",
    )(_closed_form_s(_r))


@register(
    "c6-formulas",
    Premise.ROOT,
    "Multiplicities of S_theta(G) - u - v from the components of G - A",
)
def c6_formulas(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for u, v in _pairs(ctx.g):
        try:
            predicted = s_c6_multiplicity(ctx.g, ctx.t, u, v, ctx.cache)
        except PremiseError:
            continue
        actual = ctx.s_mult_without(_pair_mask(u, v))
        if predicted != actual:
            failures.append({"pair": [u, v], "expected": predicted, "actual": actual})
    return failures


@register(
    "c3b-formulas",
    Premise.ANY,
    "Multiplicities of G - u - v for u, v in root-free components",
)
def c3b_formulas(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for u, v in _pairs(ctx.g):
        try:
            predicted = c3b_multiplicity(
                ctx.g, ctx.t, u, v, ctx.cache, decomp=ctx.decomp
            )
        except PremiseError:
            continue
        pair = _pair_mask(u, v)
        actual = ctx.mult_without(pair)
        on_s = ctx.s_mult_without(pair)
        if not predicted == actual == on_s:
            failures.append(
                {"pair": [u, v], "expected": predicted, "actual": [actual, on_s]}
            )
    return failures


@register(
    "coarse-bounds",
    Premise.ROOT,
    "Pair shifts stay in the range set by the class of the first vertex",
)
def coarse_bounds(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    failures: list[Witness] = []
    for u, v in combinations(ctx.g.vertices(), 2):
        shift = ctx.mult_without(_pair_mask(u, v)) - ctx.base
        for first in (u, v):
            lo, hi = SHIFT_RANGE[ctx.kinds[first]]
            if not lo <= shift <= hi:
                failures.append({"pair": [u, v], "vertex": first, "shift": shift})
    for u in iter_bits(dec.special):
        for v in ctx.g.vertices():
            if v == u:
                continue
            if dec.neutral >> v & 1:
                expected = 1
            elif (dec.positive | dec.special) >> v & 1:
                expected = 2
            else:
                expected = 0
            shift = ctx.mult_without(_pair_mask(u, v)) - ctx.base
            if shift != expected:
                failures.append(
                    {"pair": [u, v], "expected": expected, "actual": shift}
                )
    return failures


def _in(mask: int, *vertices: int) -> bool:
    return all(mask >> x & 1 for x in vertices)


def _across(x: int, y: int, u: int, v: int) -> bool:
    return (_in(x, u) and _in(y, v)) or (_in(x, v) and _in(y, u))


@register(
    "class-constraints",
    Premise.ROOT,
    "Every D_r edge joins the vertex classes its shift allows",
)
def class_constraints(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    b, a, n_set, p = dec.essential, dec.special, dec.neutral, dec.positive

    def allowed(r: int, u: int, v: int) -> bool:
        if r == -2:
            i, j = dec.critical_index(u), dec.critical_index(v)
            return i is not None and j is not None and i != j
        if r == -1:
            return _across(n_set, b, u, v) or _in(b, u, v)
        if r == 0:
            return _across(p | a, b, u, v) or _in(b, u, v) or _in(p | n_set, u, v)
        if r == 1:
            return _across(a, n_set, u, v) or _in(p | n_set, u, v)
        return _in(a, u, v) or _across(a, p, u, v) or _in(p, u, v)

    return [
        {"r": r, "pair": [u, v], "classes": _classes(dec)}
        for r in SHIFTS
        for u, v in ctx.bundle[r].edges()
        if not allowed(r, u, v)
    ]


@register(
    "a-extreme-in-s",
    Premise.ROOT,
    "A stays extreme in S_theta(G) - u - v for the covered placements of u, v",
)
def a_extreme_in_s(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    if not dec.special:
        return []
    failures = []
    for u, v in _pairs(ctx.g):
        if _in(dec.special, u) or _in(dec.special, v):
            continue
        in_q = dec.rootfree_index(u) is not None or dec.rootfree_index(v) is not None
        i, j = dec.critical_index(u), dec.critical_index(v)
        same_h = i is not None and i == j
        distinct_h = i is not None and j is not None and i != j and ctx.base >= 2
        if not (in_q or same_h or distinct_h):
            continue
        rest = ctx.s.delete_vertices(_pair_mask(u, v))
        if not is_extreme(rest, ctx.t, dec.special, ctx.s_cache):
            failures.append({"pair": [u, v], "A": bits(dec.special)})
    return failures


@register(
    "special-inheritance",
    Premise.ROOT,
    "Deleting a vertex of P or N keeps every special vertex special",
)
def special_inheritance(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    failures = []
    for u in iter_bits(dec.positive | dec.neutral):
        after = decomposition(ctx.g.delete_vertices(1 << u), ctx.t, ctx.cache)
        if dec.special & ~after.special:
            failures.append(
                {
                    "vertex": u,
                    "expected": bits(dec.special),
                    "actual": bits(after.special),
                }
            )
    return failures


@register(
    "a-extreme-in-g",
    Premise.ROOT,
    "A stays extreme in G - u - v for u, v in P or N",
)
def a_extreme_in_g(ctx: PropertyContext) -> list[Witness]:
    dec = ctx.decomp
    if not dec.special:
        return []
    outside = dec.positive | dec.neutral
    return [
        {"pair": [u, v], "A": bits(dec.special)}
        for u, v in combinations(bits(outside), 2)
        if not is_extreme(
            ctx.g.delete_vertices(_pair_mask(u, v)), ctx.t, dec.special, ctx.cache
        )
    ]


# -- nice, extreme and Tutte sets ---------------------------------------------


@register(
    "nice-iff-extreme",
    Premise.ANY,
    "A set of two or more vertices is nice iff it is extreme",
    cap="bruteforce_max_vertices",
)
def nice_iff_extreme(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for x in _subsets(ctx.g, 2):
        nice = is_nice(ctx.g, ctx.t, x, ctx.cache)
        extreme = is_extreme(ctx.g, ctx.t, x, ctx.cache)
        if nice != extreme:
            failures.append({"set": bits(x), "nice": nice, "extreme": extreme})
    return failures


@register(
    "extreme-implies-nice",
    Premise.ANY,
    "Every extreme set of two or more vertices is nice",
    cap="bruteforce_max_vertices",
)
def extreme_implies_nice(ctx: PropertyContext) -> list[Witness]:
    return [
        {"set": bits(x)}
        for x in _subsets(ctx.g, 2)
        if is_extreme(ctx.g, ctx.t, x, ctx.cache)
        and not is_nice(ctx.g, ctx.t, x, ctx.cache)
    ]


@register(
    "tutte-implies-extreme",
    Premise.ROOT,
    "Every Tutte set is extreme",
    cap="bruteforce_max_vertices",
)
def tutte_implies_extreme(ctx: PropertyContext) -> list[Witness]:
    return [
        {"set": bits(x)}
        for x in _subsets(ctx.g, 1)
        if is_tutte(ctx.g, ctx.t, x, ctx.cache)
        and not is_extreme(ctx.g, ctx.t, x, ctx.cache)
    ]


@register(
    "triple-equivalence",
    Premise.ROOT,
    "Maximal nice, extreme and Tutte sets are the same family",
    cap="bruteforce_max_vertices",
)
def triple_equivalence(ctx: PropertyContext) -> list[Witness]:
    cap = ctx.config.bruteforce_max_vertices
    nice = maximal_nice_sets(ctx.g, ctx.t, ctx.cache)
    extreme = maximal_extreme_sets_bruteforce(ctx.g, ctx.t, ctx.cache, cap)
    tutte = maximal_tutte_sets_bruteforce(ctx.g, ctx.t, ctx.cache, cap)
    if nice == extreme == tutte:
        return []
    return [
        {
            "nice": [bits(x) for x in nice],
            "extreme": [bits(x) for x in extreme],
            "tutte": [bits(x) for x in tutte],
        }
    ]


@register(
    "all-positive-dichotomy",
    Premise.ROOT,
    "Deleting k positive vertices raises mult by k or by at most k - 2",
    cap="bruteforce_max_vertices",
)
def all_positive_dichotomy(ctx: PropertyContext) -> list[Witness]:
    positives = [v for v, kind in ctx.kinds.items() if kind is POSITIVE]
    failures = []
    for size in range(1, len(positives) + 1):
        for chosen in combinations(positives, size):
            gap = ctx.mult_without(mask_of(chosen)) - ctx.base
            if gap == size - 1 or gap > size:
                failures.append({"set": list(chosen), "gap": gap})
    return failures


@register(
    "nice-matching",
    Premise.ROOT,
    "Every maximal nice set has a sound, certified matching into partners",
)
def nice_matching_certified(ctx: PropertyContext) -> list[Witness]:
    failures = []
    for result in ctx.nice_matchings:
        faults = matching_faults(ctx.g, result)
        if faults or not result.certified:
            failures.append(
                {
                    "X": bits(result.x_set),
                    "pairs": [list(p) for p in result.pairs],
                    "faults": faults,
                    "certificates": [
                        c.to_json() for c in result.certificates if not c.holds
                    ],
                }
            )
    return failures


@register(
    "embedding",
    Premise.ROOT,
    "Swapping matched pairs embeds G[X + Y] into D_theta(G)",
)
def embedding(ctx: PropertyContext) -> list[Witness]:
    return [
        {"X": bits(result.x_set), "pairs": [list(p) for p in result.pairs]}
        for result in ctx.nice_matchings
        if not embed_check(ctx.g, ctx.t, result, ctx.cache)
    ]


@register(
    "path-criterion",
    Premise.ROOT,
    "Two positive vertices have a non-raising path iff deleting both does not raise",
    cap="bruteforce_max_vertices",
)
def path_criterion_matches(ctx: PropertyContext) -> list[Witness]:
    positives = [v for v, kind in ctx.kinds.items() if kind is POSITIVE]
    failures = []
    for u, v in combinations(positives, 2):
        by_path = path_criterion(
            ctx.g, ctx.t, u, v, ctx.cache, ctx.config.path_enumeration_limit
        )
        by_pair = ctx.mult_without(_pair_mask(u, v)) <= ctx.base
        if by_path != by_pair:
            failures.append({"pair": [u, v], "expected": by_pair, "actual": by_path})
    return failures


@register(
    "zero-nice-independent",
    Premise.ZERO,
    "Maximal nice sets at zero are the maximal independent sets of D_theta",
)
def zero_nice_independent(ctx: PropertyContext) -> list[Witness]:
    nice = maximal_nice_sets(ctx.g, ctx.t, ctx.cache)
    cliques = ctx.bundle.d_theta.complement().maximal_cliques()
    independent = [c for c in cliques if c.bit_count() > 1]
    if nice == independent:
        return []
    return [
        {"nice": [bits(x) for x in nice], "independent": [bits(x) for x in independent]}
    ]
