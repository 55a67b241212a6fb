"""Tests for vertex classes and the theta-Gallai-Edmonds decomposition."""

import pytest
from hypothesis import given, settings

from src.algebra.algebraic import AlgebraicNumber
from src.graphs.graph import Graph, mask_of
from src.graphs.matching_polynomial import MatchPolyCache, mult, theta_candidates
from src.theory.classify import (
    c_theta,
    classify_vertices,
    decomposition,
    is_theta_critical,
    vertex_class,
    vertex_kind,
)
from src.theory.models import VertexClass, VertexKind
from tests.strategies import graphs


class TestVertexClass:
    """Tests for single-vertex classification."""

    def test_path_leaf_is_essential(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that a leaf of P3 is 0-essential."""
        assert vertex_kind(p3, zero, 0) is VertexKind.ESSENTIAL

    def test_path_centre_is_positive_and_special(
        self, p3: Graph, zero: AlgebraicNumber
    ) -> None:
        """Test that the centre of P3 is 0-positive with an essential neighbour."""
        assert vertex_class(p3, zero, 1) == VertexClass(VertexKind.POSITIVE, True)

    def test_edge_endpoints_at_one(self, one: AlgebraicNumber) -> None:
        """Test that both endpoints of K2 are 1-essential."""
        k2 = Graph.complete(2)
        assert classify_vertices(k2, one) == {
            0: VertexKind.ESSENTIAL,
            1: VertexKind.ESSENTIAL,
        }

    def test_non_root_makes_everything_neutral(self, p3: Graph) -> None:
        """Test that every vertex is neutral for a value that is never a root."""
        sample = AlgebraicNumber.from_rational(3)
        assert set(classify_vertices(p3, sample).values()) == {VertexKind.NEUTRAL}

    def test_essential_cannot_be_special(self) -> None:
        """Test that the special flag is rejected on essential vertices."""
        with pytest.raises(ValueError, match="cannot be special"):
            VertexClass(VertexKind.ESSENTIAL, special=True)

    def test_dead_vertex_rejected(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that classifying a deleted vertex fails."""
        with pytest.raises(ValueError) as exc_info:
            vertex_kind(p3.delete_vertices([1]), zero, 1)
        assert "not live" in str(exc_info.value)


class TestDecomposition:
    """Tests for the B/A/N/P partition."""

    def test_example10(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test the ten-vertex example: A = {0, 1} over four critical edges."""
        dec = decomposition(example10, one)
        assert dec.base_mult == 2
        assert dec.special == mask_of([0, 1])
        assert dec.essential == mask_of(range(2, 10))
        assert dec.neutral == 0
        assert dec.positive == 0
        assert dec.criticals == (
            mask_of([2, 3]),
            mask_of([4, 5]),
            mask_of([6, 7]),
            mask_of([8, 9]),
        )
        assert dec.rootfree == ()

    def test_path(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that P3 at 0 has the leaves in B and the centre in A."""
        dec = decomposition(p3, zero)
        assert dec.essential == mask_of([0, 2])
        assert dec.special == mask_of([1])
        assert dec.neutral == dec.positive == 0
        assert dec.criticals == (mask_of([0]), mask_of([2]))

    def test_perfect_matching_has_no_special(self, zero: AlgebraicNumber) -> None:
        """Test that K2 at 0 is a single root-free component."""
        dec = decomposition(Graph.complete(2), zero)
        assert dec.essential == dec.special == 0
        assert dec.positive == mask_of([0, 1])
        assert dec.rootfree == (mask_of([0, 1]),)

    def test_claw(self, claw: Graph, zero: AlgebraicNumber) -> None:
        """Test that the centre of K_{1,3} is special over three critical leaves."""
        dec = decomposition(claw, zero)
        assert dec.base_mult == 2
        assert dec.special == mask_of([0])
        assert len(dec.criticals) == 3

    def test_json_lists_sorted_vertices(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test the JSON form of a decomposition."""
        data = decomposition(example10, one).to_json()
        assert data["A"] == [0, 1]
        assert data["mult"] == 2
        assert data["critical_components"][0] == [2, 3]
        assert data["theta"] == {"defpoly": [-1, 1], "point": "1"}

    def test_component_lookup(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test locating vertices in the components below A."""
        dec = decomposition(example10, one)
        assert dec.critical_index(5) == 1
        assert dec.critical_index(0) is None
        assert dec.rootfree_index(5) is None

    @settings(max_examples=40)
    @given(graphs(max_n=7))
    def test_structure_at_every_root(self, g: Graph) -> None:
        """Test the partition, component and counting facts at every root."""
        cache = MatchPolyCache.for_graph(g)
        for theta in theta_candidates(g, cache):
            dec = decomposition(g, theta, cache)
            parts = [dec.essential, dec.special, dec.neutral, dec.positive]
            assert sum(p.bit_count() for p in parts) == g.order
            assert dec.vertices == g.live
            critical_union = 0
            for component in dec.criticals:
                critical_union |= component
                assert mult(theta, g.restrict(component), cache) == 1
                assert is_theta_critical(g.restrict(component), theta, cache)
            assert critical_union == dec.essential
            for component in dec.rootfree:
                assert mult(theta, g.restrict(component), cache) == 0
            assert len(dec.criticals) == dec.special.bit_count() + dec.base_mult

    @settings(max_examples=30)
    @given(graphs(max_n=7))
    def test_no_neutral_vertices_at_zero(self, g: Graph) -> None:
        """Test that no vertex is 0-neutral."""
        zero = AlgebraicNumber.from_rational(0)
        assert VertexKind.NEUTRAL not in classify_vertices(g, zero).values()


class TestCriticality:
    """Tests for theta-critical graphs and c_theta."""

    @pytest.mark.parametrize(
        ("graph", "value", "expected"),
        [
            (Graph.complete(2), 1, True),
            (Graph.complete(2), 0, False),
            (Graph.empty(1), 0, True),
            (Graph.complete(3), 0, True),
        ],
    )
    def test_is_theta_critical(self, graph: Graph, value: int, expected: bool) -> None:
        """Test small connected graphs."""
        theta = AlgebraicNumber.from_rational(value)
        assert is_theta_critical(graph, theta) is expected

    def test_disconnected_rejected(self, two_k2: Graph, one: AlgebraicNumber) -> None:
        """Test that criticality is refused on a disconnected graph."""
        with pytest.raises(ValueError) as exc_info:
            is_theta_critical(two_k2, one)
        assert "connected" in str(exc_info.value)

    def test_c_theta(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test critical-component counts."""
        zero = AlgebraicNumber.from_rational(0)
        assert c_theta(Graph.empty(2), zero) == 2
        assert c_theta(Graph.complete(2), zero) == 0
        assert c_theta(example10.delete_vertices([0, 1]), one) == 4
        assert c_theta(example10, one) == 0
