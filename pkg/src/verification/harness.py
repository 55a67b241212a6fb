"""Batch verification over a graph corpus.

For every graph the theta-independent properties run once; every other
property runs at each distinct root of the matching polynomial and at the
configured rational sample when the sample is not a root. Reports come out in
corpus order, then theta order, then registration order.

Usage:
    reports = run_suite(CorpusSpec.parse("atlas:max_n=6"), ["mu-oracle"])
    write_json(reports, Path("reports.json"))
"""

import json
import logging
from collections import Counter
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.algebra.algebraic import AlgebraicNumber
from src.config.models import EngineConfig
from src.errors import InvariantBreach, OracleCapError, PremiseError
from src.graphs.graph import Graph
from src.graphs.graph6 import parse_graph6, to_graph6
from src.graphs.matching_polynomial import MatchPolyCache, mult, theta_candidates

from . import properties  # noqa: F401
from .corpus import iter_corpus
from .models import CorpusSpec, PropertyReport, Status
from .registry import (
    Premise,
    Property,
    PropertyContext,
    premise_holds,
    select,
)

logger = logging.getLogger(__name__)

MAX_WITNESSES = 5


def run_property(prop: Property, ctx: PropertyContext) -> PropertyReport:
    """Check one property on one instance, turning every outcome into a report."""
    base: dict[str, Any] = {
        "graph": to_graph6(ctx.g),
        "theta": ctx.theta.to_json() if ctx.theta is not None else None,
        "property": prop.name,
    }
    if not premise_holds(prop.premise, ctx):
        return PropertyReport(
            **base, status=Status.PREMISE_SKIPPED, detail=f"needs {prop.premise}"
        )
    if prop.cap is not None:
        cap = getattr(ctx.config, prop.cap)
        if ctx.g.order > cap:
            return PropertyReport(
                **base,
                status=Status.CAP_SKIPPED,
                detail=f"{ctx.g.order} vertices > {prop.cap}={cap}",
            )
    try:
        failures = prop.check(ctx)
    except OracleCapError as e:
        return PropertyReport(**base, status=Status.CAP_SKIPPED, detail=str(e))
    except (InvariantBreach, PremiseError) as e:
        witness = getattr(e, "witness", {})
        return PropertyReport(
            **base,
            status=Status.FAIL,
            witness={"error": str(e), **witness},
            detail=type(e).__name__,
        )

    if not failures:
        return PropertyReport(**base, status=Status.PASS)
    informational = bool(prop.informational_when and prop.informational_when(ctx))
    if informational:
        logger.warning(
            f"Informational discrepancy in {prop.name} on {base['graph']} "
            f"at theta={ctx.theta}"
        )
    else:
        logger.debug(f"{prop.name} failed on {base['graph']} at theta={ctx.theta}")
    return PropertyReport(
        **base,
        status=Status.FAIL,
        informational=informational,
        witness={"failures": failures[:MAX_WITNESSES], "count": len(failures)},
        detail=f"{len(failures)} failure(s)",
    )


def thetas_for(
    g: Graph, cache: MatchPolyCache, sample: AlgebraicNumber
) -> list[AlgebraicNumber]:
    """Every distinct root of ``mu(g)``, then ``sample`` if it is not one of them."""
    thetas = theta_candidates(g, cache)
    if mult(sample, g, cache) == 0:
        thetas.append(sample)
    return thetas


def check_graph(
    g: Graph, props: list[Property], config: EngineConfig
) -> list[PropertyReport]:
    """Run ``props`` on one graph at every theta it is checked at."""
    cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
    reports = [
        run_property(prop, PropertyContext(g, None, config, cache))
        for prop in props
        if prop.premise is Premise.GRAPH
    ]
    theta_props = [prop for prop in props if prop.premise is not Premise.GRAPH]
    if theta_props:
        sample = AlgebraicNumber.from_rational(config.sample_theta)
        for theta in thetas_for(g, cache, sample):
            ctx = PropertyContext(g, theta, config, cache)
            reports.extend(run_property(prop, ctx) for prop in theta_props)
    cache.log_stats()
    return reports


def run_suite(
    corpus: CorpusSpec,
    properties: list[str] | None = None,
    config: EngineConfig | None = None,
    console: Console | None = None,
) -> list[PropertyReport]:
    """Check the selected properties on every graph of ``corpus``.

    Args:
        corpus: Where the graphs come from
        properties: Registered names to run; all of them when empty
        config: Caps and sample settings
        console: Stream for the progress spinner

    Returns:
        Reports in deterministic order

    Raises:
        KeyError: On an unknown property name
        ValueError: If a corpus graph exceeds the vertex cap
    """
    config = config or EngineConfig()
    console = console or Console(stderr=True)
    props = select(properties)
    reports: list[PropertyReport] = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        disable=not console.is_terminal,
    ) as progress:
        task_id = progress.add_task("Verifying...", total=None)
        for index, g in enumerate(iter_corpus(corpus, config.max_vertices), start=1):
            progress.update(task_id, description=f"Graph {index}: {to_graph6(g)}")
            reports.extend(check_graph(g, props, config))

    failed = sum(r.is_failure for r in reports)
    logger.info(
        f"Checked {len(props)} properties: {len(reports)} reports, {failed} failures"
    )
    return reports


def summarize(reports: list[PropertyReport]) -> dict[str, dict[str, int]]:
    """Report counts per property and status, properties in first-seen order."""
    counts: dict[str, Counter[str]] = {}
    for report in reports:
        counts.setdefault(report.property, Counter())[report.status.value] += 1
    return {
        name: {status.value: counter[status.value] for status in Status}
        for name, counter in counts.items()
    }


def summary_table(summary: dict[str, dict[str, int]]) -> Table:
    table = Table(title="Verification summary")
    table.add_column("Property", style="cyan")
    for status in Status:
        table.add_column(status.value, justify="right")
    for name, counts in summary.items():
        cells = [str(counts[status.value]) for status in Status]
        if counts[Status.FAIL.value]:
            cells[1] = f"[red]{cells[1]}[/red]"
        table.add_row(name, *cells)
    return table


def reports_json(reports: list[PropertyReport]) -> str:
    payload = {
        "reports": [r.model_dump(mode="json") for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(payload, indent=2) + "\n"


def write_json(reports: list[PropertyReport], path: Path) -> None:
    path.write_text(reports_json(reports), encoding="utf-8")
    logger.info(f"Wrote {len(reports)} reports to {path}")


def load_reports(path: Path) -> list[PropertyReport]:
    """Reports from a file written by :func:`write_json`.

    Raises:
        ValueError: If the file is not a report document.
    """
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        entries = data["reports"]
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        msg = f"{path} is not a verification report file"
        raise ValueError(msg) from e
    return [PropertyReport.model_validate(entry) for entry in entries]


def replay(
    entry: PropertyReport, config: EngineConfig | None = None
) -> PropertyReport:
    """Re-run the property of ``entry`` on its graph and theta.

    Raises:
        KeyError: If the property is no longer registered.
        Graph6Error: If the stored graph does not decode.
    """
    config = config or EngineConfig()
    (prop,) = select([entry.property])
    g = parse_graph6(entry.graph, config.max_vertices)
    theta = AlgebraicNumber.from_json(entry.theta) if entry.theta else None
    cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
    result = run_property(prop, PropertyContext(g, theta, config, cache))
    logger.info(f"Replayed {entry.property} on {entry.graph}: {result.status}")
    return result
