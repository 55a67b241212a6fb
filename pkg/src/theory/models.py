"""Result types of the theta-Gallai-Edmonds computations.

All results are immutable; vertex sets are bitmasks over the root graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from src.algebra.algebraic import AlgebraicNumber
from src.graphs.graph import Graph, VertexSet, bits, union_edges

SHIFTS = (-2, -1, 0, 1, 2)


class VertexKind(StrEnum):
    """Effect of deleting a vertex on the multiplicity of theta."""

    ESSENTIAL = "essential"
    NEUTRAL = "neutral"
    POSITIVE = "positive"

    @classmethod
    def from_shift(cls, shift: int) -> VertexKind:
        """Kind for ``mult(G - v) - mult(G)``; raises ``KeyError`` off range."""
        return {-1: cls.ESSENTIAL, 0: cls.NEUTRAL, 1: cls.POSITIVE}[shift]


@dataclass(frozen=True, slots=True)
class VertexClass:
    """Base kind of a vertex plus the special flag.

    Attributes:
        kind: Essential, neutral or positive.
        special: Not essential and adjacent to an essential vertex.
    """

    kind: VertexKind
    special: bool = False

    def __post_init__(self) -> None:
        if self.special and self.kind is VertexKind.ESSENTIAL:
            msg = "An essential vertex cannot be special"
            raise ValueError(msg)

    def __str__(self) -> str:
        return f"{self.kind}, special" if self.special else str(self.kind)


@dataclass(frozen=True)
class ThetaDecomposition:
    """The partition ``V = B | A | N | P`` and the components of ``G - A``.

    Attributes:
        theta: The root the decomposition is taken at.
        base_mult: ``mult(theta, G)``.
        essential: ``B``, the essential vertices.
        special: ``A``, non-essential vertices with an essential neighbour.
        neutral: ``N``, neutral vertices outside ``A``.
        positive: ``P``, positive vertices outside ``A``.
        criticals: Components of ``G - A`` with a positive multiplicity.
        rootfree: Components of ``G - A`` with multiplicity zero.
    """

    theta: AlgebraicNumber
    base_mult: int
    essential: VertexSet
    special: VertexSet
    neutral: VertexSet
    positive: VertexSet
    criticals: tuple[VertexSet, ...]
    rootfree: tuple[VertexSet, ...]
    kinds: dict[int, VertexKind] = field(compare=False, repr=False)

    @property
    def vertices(self) -> VertexSet:
        return self.essential | self.special | self.neutral | self.positive

    def critical_index(self, v: int) -> int | None:
        return _index_of(self.criticals, v)

    def rootfree_index(self, v: int) -> int | None:
        return _index_of(self.rootfree, v)

    def same_partition(self, other: ThetaDecomposition) -> bool:
        """Equal classes and equal component lists, ignoring ``theta``."""
        return (
            self.essential == other.essential
            and self.special == other.special
            and self.neutral == other.neutral
            and self.positive == other.positive
            and sorted(self.criticals) == sorted(other.criticals)
            and sorted(self.rootfree) == sorted(other.rootfree)
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "theta": self.theta.to_json(),
            "mult": self.base_mult,
            "B": bits(self.essential),
            "A": bits(self.special),
            "N": bits(self.neutral),
            "P": bits(self.positive),
            "critical_components": [bits(c) for c in self.criticals],
            "rootfree_components": [bits(c) for c in self.rootfree],
        }


def _index_of(components: tuple[VertexSet, ...], v: int) -> int | None:
    for i, component in enumerate(components):
        if component >> v & 1:
            return i
    return None


@dataclass(frozen=True)
class DGraphBundle:
    """The five pair-shift graphs ``D_r`` for ``r = -2..2`` on ``V(G)``.

    Attributes:
        by_shift: ``r`` to the graph of pairs whose deletion shifts the
            multiplicity by exactly ``r``.
    """

    by_shift: dict[int, Graph]

    def __getitem__(self, r: int) -> Graph:
        return self.by_shift[r]

    @property
    def d_theta(self) -> Graph:
        """Pairs whose deletion does not raise the multiplicity."""
        return union_edges(union_edges(self[-2], self[-1]), self[0])

    @property
    def g_plus(self) -> Graph:
        return union_edges(self[1], self[2])


@dataclass(frozen=True, slots=True)
class SubsetCertificate:
    """Multiplicity record for deleting the vertices of a sub-matching.

    Attributes:
        pairs: Indices into the matching's pair list.
        expected: ``mult(theta, G)``.
        actual: ``mult(theta, G - V(M'))``.
        residual_nice: Whether the unmatched part of ``X`` is still nice in
            ``G - V(M')``; ``None`` when fewer than two members remain.
    """

    pairs: tuple[int, ...]
    expected: int
    actual: int
    residual_nice: bool | None

    @property
    def holds(self) -> bool:
        return self.expected == self.actual and self.residual_nice is not False

    def to_json(self) -> dict[str, Any]:
        return {
            "pairs": list(self.pairs),
            "expected": self.expected,
            "actual": self.actual,
            "residual_nice": self.residual_nice,
        }


@dataclass(frozen=True)
class NiceMatchingResult:
    """Matching from a nice set ``X`` into essential partners ``Y``.

    Attributes:
        pairs: ``(x_i, y_i)`` in construction order.
        x_set: The nice set.
        y_set: The partners.
        certificates: One record per checked sub-matching.
        exhaustive: Whether every sub-matching was certified.
    """

    pairs: tuple[tuple[int, int], ...]
    x_set: VertexSet
    y_set: VertexSet
    certificates: tuple[SubsetCertificate, ...] = ()
    exhaustive: bool = True

    @property
    def certified(self) -> bool:
        return all(c.holds for c in self.certificates)

    def to_json(self) -> dict[str, Any]:
        return {
            "pairs": [list(p) for p in self.pairs],
            "X": bits(self.x_set),
            "Y": bits(self.y_set),
            "exhaustive": self.exhaustive,
            "certified": self.certified,
            "certificates": [c.to_json() for c in self.certificates],
        }
