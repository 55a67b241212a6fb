"""Property registry and the per-instance context checks run against.

A property is a function from a :class:`PropertyContext` to a list of
failure witnesses; an empty list means it holds. Each registration names the
premise under which the property is asserted and, optionally, the config
field capping the graph order it is run on.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Any

from src.algebra.algebraic import AlgebraicNumber
from src.config.models import EngineConfig
from src.graphs.graph import Graph, mask_of
from src.graphs.matching_polynomial import MatchPolyCache, mult
from src.theory.classify import decomposition
from src.theory.models import (
    DGraphBundle,
    NiceMatchingResult,
    ThetaDecomposition,
    VertexKind,
)
from src.theory.operators import d_graph_bundle, s_graph
from src.theory.tutte_sets import bounded_paths, maximal_nice_sets, nice_matching

logger = logging.getLogger(__name__)

Witness = dict[str, Any]


class Premise(StrEnum):
    """When a property is asserted."""

    GRAPH = "graph"
    ANY = "any"
    ROOT = "root"
    MULT_TWO = "mult>=2"
    NONZERO_ROOT = "nonzero-root"
    ZERO = "zero"


@dataclass
class PropertyContext:
    """Lazily computed facts about one (graph, theta) instance.

    ``theta`` is None for theta-independent properties.
    """

    g: Graph
    theta: AlgebraicNumber | None
    config: EngineConfig = field(default_factory=EngineConfig)
    cache: MatchPolyCache = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.cache is None:
            self.cache = MatchPolyCache.for_graph(self.g, self.config.cache_max_entries)

    @property
    def t(self) -> AlgebraicNumber:
        if self.theta is None:
            msg = "This property needs a theta"
            raise ValueError(msg)
        return self.theta

    @cached_property
    def base(self) -> int:
        return mult(self.t, self.g, self.cache)

    @cached_property
    def decomp(self) -> ThetaDecomposition:
        return decomposition(self.g, self.t, self.cache)

    @property
    def kinds(self) -> dict[int, VertexKind]:
        return self.decomp.kinds

    @cached_property
    def bundle(self) -> DGraphBundle:
        return d_graph_bundle(self.g, self.t, self.cache)

    @cached_property
    def s(self) -> Graph:
        return s_graph(self.g, self.t, self.cache, decomp=self.decomp)

    @cached_property
    def s_cache(self) -> MatchPolyCache:
        if self.s is self.g:
            return self.cache
        return MatchPolyCache.for_graph(self.s, self.config.cache_max_entries)

    @cached_property
    def path_mults(self) -> dict[tuple[int, ...], int]:
        """Multiplicity after deleting each simple path with two or more vertices.

        Raises:
            OracleCapError: If some pair has too many paths.
        """
        limit = self.config.path_enumeration_limit
        vertices = self.g.vertices()
        table: dict[tuple[int, ...], int] = {}
        for i, u in enumerate(vertices):
            for v in vertices[i + 1 :]:
                for path in bounded_paths(self.g, u, v, limit):
                    table[path] = self.mult_without(mask_of(path))
        return table

    @cached_property
    def nice_matchings(self) -> list[NiceMatchingResult]:
        """One constructive matching per maximal nice set."""
        return [
            nice_matching(
                self.g,
                self.t,
                x,
                self.cache,
                certificate_limit=self.config.subset_certificate_limit,
                certificate_samples=self.config.random_certificate_samples,
                seed=self.config.seed,
            )
            for x in maximal_nice_sets(self.g, self.t, self.cache)
        ]

    def mult_without(self, mask: int) -> int:
        return mult(self.t, self.g.delete_vertices(mask), self.cache)

    def s_mult_without(self, mask: int) -> int:
        return mult(self.t, self.s.delete_vertices(mask), self.s_cache)


def premise_holds(premise: Premise, ctx: PropertyContext) -> bool:
    if premise is Premise.GRAPH:
        return ctx.theta is None
    if ctx.theta is None:
        return False
    if premise is Premise.ANY:
        return True
    if premise is Premise.ZERO:
        return ctx.t.is_zero()
    if ctx.base < 1:
        return False
    if premise is Premise.MULT_TWO:
        return ctx.base >= 2
    if premise is Premise.NONZERO_ROOT:
        return not ctx.t.is_zero()
    return True


@dataclass(frozen=True)
class Property:
    """A registered property.

    Attributes:
        name: Registry key and report name
        check: Returns failure witnesses
        premise: When the property is asserted
        description: One line for listings
        cap: EngineConfig field bounding the graph order, if any
        informational_when: Failures are informational when this holds
    """

    name: str
    check: Callable[[PropertyContext], list[Witness]]
    premise: Premise
    description: str
    cap: str | None = None
    informational_when: Callable[[PropertyContext], bool] | None = None


PROPERTIES: dict[str, Property] = {}


def register(
    name: str,
    premise: Premise,
    description: str,
    *,
    cap: str | None = None,
    informational_when: Callable[[PropertyContext], bool] | None = None,
) -> Callable[
    [Callable[[PropertyContext], list[Witness]]],
    Callable[[PropertyContext], list[Witness]],
]:
    """Decorator adding a check to :data:`PROPERTIES`."""

    def wrap(
        fn: Callable[[PropertyContext], list[Witness]],
    ) -> Callable[[PropertyContext], list[Witness]]:
        if name in PROPERTIES:
            msg = f"Property {name!r} registered twice"
            raise ValueError(msg)
        PROPERTIES[name] = Property(
            name, fn, premise, description, cap, informational_when
        )
        return fn

    return wrap


def select(names: list[str] | None) -> list[Property]:
    """Registered properties by name, in registration order when ``names`` is None.

    Raises:
        KeyError: On an unknown name.
    """
    if not names:
        return list(PROPERTIES.values())
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        msg = f"Unknown properties: {', '.join(unknown)}"
        raise KeyError(msg)
    return [PROPERTIES[n] for n in names]
