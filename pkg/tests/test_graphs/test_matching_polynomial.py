"""Tests for matching polynomials, the brute-force oracle and multiplicities."""

import pytest
from hypothesis import given

from src.algebra.algebraic import AlgebraicNumber, equals, negate
from src.algebra.polynomial import Polynomial
from src.errors import OracleCapError
from src.graphs.graph import Graph
from src.graphs.matching_polynomial import (
    MatchPolyCache,
    derivative_identity_holds,
    edge_recurrence_holds,
    matching_polynomial,
    matching_polynomial_oracle,
    mult,
    theta_candidates,
)
from tests.strategies import graphs


class TestMatchingPolynomial:
    """Tests for the memoised recurrence."""

    @pytest.mark.parametrize(
        ("graph", "coeffs"),
        [
            (Graph.empty(1), (0, 1)),
            (Graph.complete(2), (-1, 0, 1)),
            (Graph.cycle(4), (2, 0, -4, 0, 1)),
            (Graph.complete(3), (0, -3, 0, 1)),
            (Graph.from_edges(4, [(0, 1), (2, 3)]), (1, 0, -2, 0, 1)),
            (Graph.empty(0), (1,)),
        ],
    )
    def test_known_polynomials(self, graph: Graph, coeffs: tuple[int, ...]) -> None:
        """Test hand-computed matching polynomials."""
        assert matching_polynomial(graph) == Polynomial(coeffs)

    @given(graphs(max_n=8))
    def test_recurrence_matches_oracle(self, g: Graph) -> None:
        """Test the recurrence against direct matching enumeration."""
        assert matching_polynomial(g) == matching_polynomial_oracle(g)

    @given(graphs(max_n=7))
    def test_edge_recurrence(self, g: Graph) -> None:
        """Test mu(G) = mu(G - e) - mu(G - u - v) on every edge."""
        cache = MatchPolyCache.for_graph(g)

        assert all(edge_recurrence_holds(g, u, v, cache) for u, v in g.edges())

    @given(graphs(max_n=7))
    def test_derivative_identity(self, g: Graph) -> None:
        """Test that the derivative is the sum over vertex-deleted subgraphs."""
        assert derivative_identity_holds(g)

    def test_cache_is_tied_to_its_root(self) -> None:
        """Test that a cache refuses a graph with another adjacency."""
        cache = MatchPolyCache.for_graph(Graph.path(3))

        with pytest.raises(ValueError) as exc_info:
            matching_polynomial(Graph.complete(3), cache)

        assert "root graph" in str(exc_info.value)

    def test_cache_clears_on_cap(self) -> None:
        """Test clear-on-cap eviction still yields the right answer."""
        g = Graph.cycle(6)
        cache = MatchPolyCache.for_graph(g, max_entries=3)

        assert matching_polynomial(g, cache) == matching_polynomial_oracle(g)
        assert cache.clears > 0

    def test_views_share_the_cache(self) -> None:
        """Test that induced subgraphs hit the root cache."""
        g = Graph.cycle(5)
        cache = MatchPolyCache.for_graph(g)
        matching_polynomial(g, cache)
        hits = cache.hits

        matching_polynomial(g.delete_vertices([0]), cache)

        assert cache.hits > hits


class TestOracle:
    """Tests for the brute-force oracle."""

    def test_edgeless(self) -> None:
        """Test that only the empty matching exists without edges."""
        assert matching_polynomial_oracle(Graph.empty(4)) == Polynomial((0, 0, 0, 0, 1))

    def test_refuses_large_graphs(self) -> None:
        """Test that the oracle cap is enforced."""
        with pytest.raises(OracleCapError) as exc_info:
            matching_polynomial_oracle(Graph.path(13))

        assert "refused" in str(exc_info.value)

    def test_cap_is_configurable(self) -> None:
        """Test that a raised cap admits a larger graph."""
        poly = matching_polynomial_oracle(Graph.path(13), max_vertices=13)

        assert poly == matching_polynomial(Graph.path(13))


class TestMultiplicity:
    """Tests for mult and theta candidates."""

    def test_zero_in_p3(self, zero: AlgebraicNumber) -> None:
        """Test that 0 is a simple root of x^3 - 2x."""
        assert mult(zero, Graph.path(3)) == 1

    def test_one_in_k2(self, one: AlgebraicNumber) -> None:
        """Test that 1 is a simple root of x^2 - 1."""
        assert mult(one, Graph.complete(2)) == 1

    def test_example10(self, example10: Graph, one: AlgebraicNumber) -> None:
        """Test mult(1, G) = 2 and the drop to 1 after deleting vertices 3 and 5."""
        cache = MatchPolyCache.for_graph(example10)

        assert mult(one, example10, cache) == 2
        assert mult(one, example10.delete_vertices([3, 5]), cache) == 1

    def test_candidates_of_k2(self) -> None:
        """Test that the roots of x^2 - 1 are the points -1 and 1."""
        roots = theta_candidates(Graph.complete(2))

        assert [(r.lo, r.hi) for r in roots] == [(-1, -1), (1, 1)]

    def test_candidates_of_p3(self, sqrt2_theta: AlgebraicNumber) -> None:
        """Test that P3 has roots -sqrt(2), 0 and sqrt(2)."""
        roots = theta_candidates(Graph.path(3))

        assert len(roots) == 3
        assert roots[1].is_point and roots[1].lo == 0
        assert equals(roots[2], sqrt2_theta)
        assert equals(roots[0], negate(sqrt2_theta))

    def test_candidates_of_edgeless(self) -> None:
        """Test that x^2 has the single root 0."""
        roots = theta_candidates(Graph.empty(2))

        assert [(r.lo, r.hi) for r in roots] == [(0, 0)]

    @given(graphs(max_n=7))
    def test_interlacing_and_symmetry(self, g: Graph) -> None:
        """Test |mult(G) - mult(G - u)| <= 1 and mult(theta) = mult(-theta)."""
        cache = MatchPolyCache.for_graph(g)
        for theta in theta_candidates(g, cache):
            base = mult(theta, g, cache)
            assert base == mult(negate(theta), g, cache)
            for u in g.vertices():
                assert abs(base - mult(theta, g.delete_vertices([u]), cache)) <= 1
