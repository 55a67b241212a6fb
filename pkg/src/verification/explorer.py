"""Iterate the D_theta operator and record whether the chain settles.

Theta is held fixed at the original algebraic number along the whole chain;
it is not re-derived from the roots of each iterate. The last two iterates
are compared up to isomorphism, which is how the classical ``theta = 0``
behaviour is stated; labelled equality is recorded alongside. Findings are
informational and never fail a run.
"""

import logging

import networkx as nx
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn

from src.algebra.algebraic import AlgebraicNumber
from src.config.models import EngineConfig
from src.graphs.graph import Graph
from src.graphs.graph6 import to_graph6
from src.graphs.matching_polynomial import MatchPolyCache, theta_candidates
from src.theory.operators import d_graph

from .corpus import iter_corpus, to_networkx
from .models import CorpusSpec, PropertyReport, Status

logger = logging.getLogger(__name__)

PROPERTY_NAME = "iterated-d"


def d_chain(
    g: Graph, theta: AlgebraicNumber, depth: int, cache_max_entries: int
) -> list[Graph]:
    """``[G, D(G), D(D(G)), ...]`` with ``depth`` applications."""
    chain = [g]
    for _ in range(depth):
        current = chain[-1]
        cache = MatchPolyCache.for_graph(current, cache_max_entries)
        chain.append(d_graph(current, theta, cache))
    return chain


def explore_graph(
    g: Graph,
    theta: AlgebraicNumber,
    depth: int,
    config: EngineConfig,
) -> PropertyReport:
    chain = d_chain(g, theta, depth, config.cache_max_entries)
    last, previous = chain[-1], chain[-2]
    labelled = last.same_induced(previous)
    converged = labelled or nx.is_isomorphic(to_networkx(last), to_networkx(previous))
    if not converged:
        logger.info(f"D chain of {to_graph6(g)} at {theta} still moving at {depth}")
    return PropertyReport(
        graph=to_graph6(g),
        theta=theta.to_json(),
        property=PROPERTY_NAME,
        status=Status.PASS if converged else Status.FAIL,
        informational=True,
        witness={
            "chain": [to_graph6(step) for step in chain],
            "depth": depth,
            "theta_policy": "fixed",
            "labelled_equal": labelled,
        },
        detail="converged" if converged else "diverged-candidate",
    )


def explore_iterated_d(
    corpus: CorpusSpec,
    depth: int | None = None,
    theta: AlgebraicNumber | None = None,
    config: EngineConfig | None = None,
    console: Console | None = None,
) -> list[PropertyReport]:
    """Compare the last two iterates of D_theta for every corpus graph.

    Args:
        corpus: Graphs to explore
        depth: Number of D_theta applications; the config value when None
        theta: Fixed theta for every graph; each graph's distinct roots when None
        config: Caps and defaults
        console: Stream for the progress spinner

    Raises:
        ValueError: If ``depth`` is below one.
    """
    config = config or EngineConfig()
    depth = depth if depth is not None else config.explore_depth
    if depth < 1:
        msg = f"Exploration depth must be at least 1, got {depth}"
        raise ValueError(msg)
    console = console or Console(stderr=True)

    reports: list[PropertyReport] = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        disable=not console.is_terminal,
    ) as progress:
        task_id = progress.add_task("Exploring...", total=None)
        for g in iter_corpus(corpus, config.max_vertices):
            progress.update(task_id, description=f"Exploring {to_graph6(g)}")
            if theta is not None:
                thetas = [theta]
            else:
                cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
                thetas = theta_candidates(g, cache)
            reports.extend(explore_graph(g, t, depth, config) for t in thetas)

    moving = sum(r.status is Status.FAIL for r in reports)
    logger.info(f"Explored {len(reports)} chains, {moving} not yet settled")
    return reports
