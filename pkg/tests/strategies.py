"""Hypothesis strategies shared across the test suite."""

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.algebra.polynomial import Polynomial
from src.graphs.graph import Graph

settings.register_profile(
    "engine",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("engine")


@st.composite
def polynomials(
    draw: st.DrawFn, min_degree: int = 0, max_degree: int = 5, bound: int = 20
) -> Polynomial:
    size = draw(st.integers(min_value=min_degree + 1, max_value=max_degree + 1))
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=size, max_size=size))
    if min_degree > 0 and coeffs[-1] == 0:
        coeffs[-1] = 1
    return Polynomial(tuple(coeffs))


def rationals() -> st.SearchStrategy[Fraction]:
    return st.fractions(min_value=-10, max_value=10, max_denominator=12)


def integer_root_lists() -> st.SearchStrategy[list[int]]:
    return st.lists(st.integers(-4, 4), max_size=5)


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen, strict=True) if keep]
    return Graph.from_edges(n, edges)
