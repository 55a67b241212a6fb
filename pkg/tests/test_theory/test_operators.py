"""Tests for the D-graph operators, S_theta and the closed forms."""

import pytest
from hypothesis import given, settings

from src.algebra.algebraic import AlgebraicNumber, negate
from src.errors import PremiseError
from src.graphs.graph import Graph, mask_of
from src.graphs.matching_polynomial import MatchPolyCache, theta_candidates
from src.theory.classify import decomposition
from src.theory.operators import (
    c3b_multiplicity,
    d_graph,
    d_graph_bundle,
    d_graph_closed_form,
    d_r_closed_form_on_S,
    d_r_graph,
    pair_shifts,
    s_c6_multiplicity,
    s_graph,
    same_gallai_edmonds,
)
from tests.strategies import graphs

CROSS_PAIRS = [(0, 2), (0, 3), (1, 2), (1, 3)]


class TestPairGraphs:
    """Tests for D_r and D_theta computed directly."""

    def test_two_edges_at_zero(self, two_k2: Graph, zero: AlgebraicNumber) -> None:
        """Test the shift of every pair of 2K2."""
        assert d_r_graph(two_k2, zero, 2).edges() == CROSS_PAIRS
        assert d_r_graph(two_k2, zero, 0).edges() == [(0, 1), (2, 3)]
        assert d_graph(two_k2, zero).edges() == [(0, 1), (2, 3)]

    def test_single_edge(self, zero: AlgebraicNumber) -> None:
        """Test that K2 is its own D_0."""
        assert d_graph(Graph.complete(2), zero).edges() == [(0, 1)]

    def test_example10_pair_not_in_minus_two(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test that deleting 3 and 5 drops the multiplicity by one only."""
        shifts = pair_shifts(example10, one)
        assert shifts[(3, 5)] == -1
        assert not d_r_graph(example10, one, -2).has_edge(3, 5)

    def test_example10_d_graph_misses_only_the_special_pair(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test that D_1 of the ten-vertex example is K10 minus the edge 0-1."""
        d = d_graph(example10, one)
        assert len(d.edges()) == 44
        assert not d.has_edge(0, 1)

    def test_bad_shift_rejected(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that shifts outside -2..2 are refused."""
        with pytest.raises(ValueError) as exc_info:
            d_r_graph(p3, zero, 3)
        assert "Shift" in str(exc_info.value)

    def test_bundle_views(self, two_k2: Graph, zero: AlgebraicNumber) -> None:
        """Test the derived D_theta and G_plus of a bundle."""
        bundle = d_graph_bundle(two_k2, zero)
        assert bundle.d_theta.edges() == [(0, 1), (2, 3)]
        assert bundle.g_plus.edges() == CROSS_PAIRS
        assert bundle[-1].edges() == []

    @settings(max_examples=40)
    @given(graphs(max_n=7))
    def test_bundle_identities(self, g: Graph) -> None:
        """Test the partition, symmetry and complement identities at every root."""
        cache = MatchPolyCache.for_graph(g)
        for theta in theta_candidates(g, cache):
            bundle = d_graph_bundle(g, theta, cache)
            total = sum(len(bundle[r].edges()) for r in range(-2, 3))
            assert total == g.order * (g.order - 1) // 2
            assert bundle.d_theta.complement().same_induced(bundle.g_plus)
            assert bundle.d_theta.same_induced(d_graph(g, theta, cache))
            mirrored = d_graph_bundle(g, negate(theta), cache)
            for r in range(-2, 3):
                assert bundle[r].same_induced(mirrored[r])

    @settings(max_examples=30)
    @given(graphs(max_n=7))
    def test_odd_shifts_empty_at_zero(self, g: Graph) -> None:
        """Test that no pair shifts the multiplicity of 0 by one."""
        zero = AlgebraicNumber.from_rational(0)
        bundle = d_graph_bundle(g, zero)
        assert bundle[-1].edges() == []
        assert bundle[1].edges() == []


class TestSGraph:
    """Tests for joining special vertices to everything."""

    def test_path_unchanged(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that P3 already has its centre joined to both leaves."""
        assert s_graph(p3, zero).same_induced(p3)

    def test_no_special_returns_same_graph(self, zero: AlgebraicNumber) -> None:
        """Test that a graph without special vertices is returned as is."""
        k2 = Graph.complete(2)
        assert s_graph(k2, zero) is k2

    def test_example10(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test the ten-vertex example and the pair 3, 5 in S."""
        s = s_graph(example10, one)
        assert s.neighbors(0) == mask_of(range(1, 10))
        assert s.neighbors(1) == mask_of([0, *range(2, 10)])
        assert s.has_edge(1, 7)
        assert d_r_graph(s, one, -2).has_edge(3, 5)

    def test_example10_same_d_graph(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test that G and S have the same D_1 and decomposition."""
        s = s_graph(example10, one)
        assert d_graph(example10, one).same_induced(d_graph(s, one))
        assert decomposition(s, one).same_partition(decomposition(example10, one))
        assert same_gallai_edmonds(example10, s, one)

    def test_extra_edge_below_special_changes_structure(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test that an edge between two critical components is detected."""
        assert not same_gallai_edmonds(example10, example10.add_edge(3, 5), one)

    @settings(max_examples=40)
    @given(graphs(max_n=7))
    def test_stability(self, g: Graph) -> None:
        """Test decomposition and D_theta stability under S at every root."""
        cache = MatchPolyCache.for_graph(g)
        for theta in theta_candidates(g, cache):
            dec = decomposition(g, theta, cache)
            s = s_graph(g, theta, cache, decomp=dec)
            s_cache = MatchPolyCache.for_graph(s)
            assert decomposition(s, theta, s_cache).same_partition(dec)
            assert d_graph(g, theta, cache).same_induced(d_graph(s, theta, s_cache))


class TestClosedForms:
    """Tests for the closed-form rebuilds."""

    def test_d_graph_two_edges(self, two_k2: Graph, zero: AlgebraicNumber) -> None:
        """Test that the closed form of D_0(2K2) is the two edges."""
        assert d_graph_closed_form(two_k2, zero).edges() == [(0, 1), (2, 3)]

    def test_d_graph_complete_when_all_essential(self, one: AlgebraicNumber) -> None:
        """Test that B = V gives a complete D_theta."""
        k2 = Graph.complete(2)
        assert d_graph_closed_form(k2, one).edges() == [(0, 1)]

    @pytest.mark.parametrize("r", [-2, -1, 0, 1, 2])
    def test_example10_on_s(
        self, example10: Graph, one: AlgebraicNumber, r: int
    ) -> None:
        """Test every shift of the ten-vertex example against S directly."""
        s = s_graph(example10, one)
        expected = d_r_graph(s, one, r)
        assert d_r_closed_form_on_S(example10, one, r).same_induced(expected)

    def test_example10_d_graph(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test the closed form of D_1 on the ten-vertex example."""
        assert d_graph_closed_form(example10, one).same_induced(d_graph(example10, one))

    def test_positive_shift_on_two_edges(
        self, two_k2: Graph, zero: AlgebraicNumber
    ) -> None:
        """Test that D_2 of 2K2 is the cross pairs."""
        assert d_r_closed_form_on_S(two_k2, zero, 2).edges() == CROSS_PAIRS

    def test_premise_refusal(self, two_k2: Graph, zero: AlgebraicNumber) -> None:
        """Test that D_0 on S is refused below multiplicity two."""
        with pytest.raises(PremiseError) as exc_info:
            d_r_closed_form_on_S(two_k2, zero, 0)
        assert "mult" in str(exc_info.value)

    def test_minus_two_empty_below_two(self, p3: Graph, zero: AlgebraicNumber) -> None:
        """Test that D_-2 is empty when the multiplicity is at most one."""
        assert d_r_closed_form_on_S(p3, zero, -2).edges() == []

    @settings(max_examples=40)
    @given(graphs(max_n=7))
    def test_closed_forms_match(self, g: Graph) -> None:
        """Test every closed form against direct computation where it applies."""
        cache = MatchPolyCache.for_graph(g)
        for theta in theta_candidates(g, cache):
            dec = decomposition(g, theta, cache)
            assert d_graph_closed_form(g, theta, cache).same_induced(
                d_graph(g, theta, cache)
            )
            s = s_graph(g, theta, cache, decomp=dec)
            s_cache = MatchPolyCache.for_graph(s)
            for r in range(-2, 3):
                if r in (-1, 0) and dec.base_mult < 2:
                    continue
                assert d_r_closed_form_on_S(g, theta, r, cache).same_induced(
                    d_r_graph(s, theta, r, s_cache)
                )


class TestMultiplicityFormulas:
    """Tests for the pair-deletion multiplicity formulas."""

    def test_two_critical_components(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test the formula for vertices in two different critical components."""
        assert s_c6_multiplicity(example10, one, 3, 5) == 0

    def test_same_critical_component(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test the formula for both ends of one critical edge."""
        assert s_c6_multiplicity(example10, one, 2, 3) == 1

    def test_two_rootfree_components(
        self, two_k2: Graph, zero: AlgebraicNumber
    ) -> None:
        """Test the formula for one endpoint of each edge of 2K2."""
        assert s_c6_multiplicity(two_k2, zero, 0, 2) == 2
        assert c3b_multiplicity(two_k2, zero, 0, 2) == 2
        assert c3b_multiplicity(two_k2, zero, 0, 1) == 0

    def test_special_vertex_refused(
        self, example10: Graph, one: AlgebraicNumber
    ) -> None:
        """Test that no formula covers a special vertex."""
        with pytest.raises(PremiseError):
            s_c6_multiplicity(example10, one, 0, 5)
        with pytest.raises(PremiseError):
            c3b_multiplicity(example10, one, 2, 5)

    def test_low_multiplicity_refused(
        self, p3: Graph, zero: AlgebraicNumber
    ) -> None:
        """Test that two critical components at multiplicity one are refused."""
        with pytest.raises(PremiseError) as exc_info:
            s_c6_multiplicity(p3, zero, 0, 2)
        assert "different critical components" in str(exc_info.value)
