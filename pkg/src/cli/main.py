"""Command group ``theta-gallai``.

Machine output (coefficient lists, integers, JSON, graph6) goes to stdout
through ``click.echo``; logging, progress and summaries go to stderr.
"""

import json
import logging
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import click
from rich.console import Console

from src.algebra.algebraic import AlgebraicNumber
from src.config.models import EngineConfig
from src.graphs.graph import Graph, bits, mask_of
from src.graphs.graph6 import to_graph6
from src.graphs.matching_polynomial import MatchPolyCache, matching_polynomial, mult
from src.logging_setup import configure_logging
from src.theory.classify import decomposition, vertex_class
from src.theory.models import SHIFTS
from src.theory.operators import d_graph, d_graph_bundle, d_r_graph, s_graph
from src.theory.tutte_sets import embed_check, maximal_nice_sets, nice_matching
from src.verification.explorer import explore_iterated_d
from src.verification.harness import (
    load_reports,
    replay,
    reports_json,
    run_suite,
    summarize,
    summary_table,
)
from src.verification.models import CorpusSpec, PropertyReport

from .graph_input import read_graph
from .theta_spec import ThetaSpecError, parse_theta

console = Console(stderr=True)
logger = logging.getLogger(__name__)


class ThetaParam(click.ParamType):
    """``p/q`` or ``poly:[c0,...];interval:lo,hi``."""

    name = "theta"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> AlgebraicNumber:
        if isinstance(value, AlgebraicNumber):
            return value
        try:
            return parse_theta(value)
        except ThetaSpecError as e:
            self.fail(str(e), param, ctx)


THETA = ThetaParam()


def engine_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    """Add ``--max-n`` and ``-v`` to a command."""
    fn = click.option(
        "--verbose",
        "-v",
        count=True,
        help="Increase verbosity (-v for DEBUG, -vv for detailed DEBUG)",
    )(fn)
    return click.option(
        "--max-n",
        type=click.IntRange(min=1),
        help="Vertex cap (overrides THETA_GALLAI_MAX_N)",
    )(fn)


def graph_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    """Add the graph argument and ``--theta``."""
    fn = click.option("--theta", type=THETA, required=True, help="Theta value")(fn)
    return click.argument("graph")(fn)


def format_option(fn: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["graph6", "json"]),
        default="graph6",
        show_default=True,
        help="Output format for graphs",
    )(fn)


def load_config(max_n: int | None) -> EngineConfig:
    config = EngineConfig.from_env()
    if max_n is None:
        return config
    return EngineConfig(**(config.model_dump() | {"max_vertices": max_n}))


@contextmanager
def command_errors(verbose: int) -> Iterator[None]:
    """Report domain errors on stderr and exit with status 1."""
    try:
        yield
    except (ValueError, RuntimeError, OSError) as e:
        console.print(f"[red]Error: {e}[/red]")
        if verbose:
            console.print_exception()
        sys.exit(1)


def emit_json(data: Any) -> None:
    click.echo(json.dumps(data, indent=2))


def emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "json":
        emit_json(g.to_edge_json())
    else:
        click.echo(to_graph6(g))


def setup(max_n: int | None, verbose: int) -> EngineConfig:
    configure_logging(verbose, console)
    try:
        return load_config(max_n)
    except ValueError as e:
        console.print(f"[red]Configuration error: {e}[/red]")
        sys.exit(1)


def parse_set(text: str) -> int:
    try:
        return mask_of(int(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        msg = f"Expected comma-separated vertices, got {text!r}"
        raise click.BadParameter(msg, param_hint="--set") from e


@click.group()
def cli() -> None:
    """Matching polynomials, theta-Gallai-Edmonds decompositions and D-graphs.

    GRAPH is a graph6 string, an edge-list JSON object, a file holding
    either, or - for standard input.
    """


@cli.command()
@click.argument("graph")
@engine_options
def mu(graph: str, max_n: int | None, verbose: int) -> None:
    """Print the coefficients of mu(G, x), constant term first."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        click.echo(json.dumps(matching_polynomial(g).to_json()))


@cli.command(name="mult")
@graph_options
@engine_options
def mult_command(
    graph: str, theta: AlgebraicNumber, max_n: int | None, verbose: int
) -> None:
    """Print the multiplicity of THETA as a root of mu(G, x)."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        click.echo(mult(theta, g))


@cli.command()
@graph_options
@engine_options
def classify(
    graph: str, theta: AlgebraicNumber, max_n: int | None, verbose: int
) -> None:
    """Print the class of every vertex."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        rows = []
        for v in g.vertices():
            vc = vertex_class(g, theta, v, cache)
            rows.append(
                {
                    "vertex": v,
                    "label": g.label(v),
                    "kind": vc.kind.value,
                    "special": vc.special,
                }
            )
        base = mult(theta, g, cache)
        emit_json({"theta": theta.to_json(), "mult": base, "vertices": rows})


@cli.command()
@graph_options
@engine_options
def decompose(
    graph: str, theta: AlgebraicNumber, max_n: int | None, verbose: int
) -> None:
    """Print the theta-Gallai-Edmonds decomposition as JSON."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        emit_json(decomposition(g, theta, cache).to_json())


@cli.command()
@graph_options
@click.option(
    "--r", "shift", type=click.IntRange(-2, 2), help="Single shift D_r instead of D"
)
@click.option("--all", "all_shifts", is_flag=True, help="All five D_r graphs")
@format_option
@engine_options
def dgraph(
    graph: str,
    theta: AlgebraicNumber,
    shift: int | None,
    all_shifts: bool,
    fmt: str,
    max_n: int | None,
    verbose: int,
) -> None:
    """Print D_theta(G), one D_r graph, or all five."""
    if shift is not None and all_shifts:
        msg = "--r and --all are mutually exclusive"
        raise click.UsageError(msg)
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        if all_shifts:
            bundle = d_graph_bundle(g, theta, cache)
            if fmt == "json":
                emit_json({str(r): bundle[r].to_edge_json() for r in SHIFTS})
            else:
                for r in SHIFTS:
                    click.echo(f"{r} {to_graph6(bundle[r])}")
        elif shift is not None:
            emit_graph(d_r_graph(g, theta, shift, cache), fmt)
        else:
            emit_graph(d_graph(g, theta, cache), fmt)


@cli.command()
@graph_options
@format_option
@engine_options
def sgraph(
    graph: str, theta: AlgebraicNumber, fmt: str, max_n: int | None, verbose: int
) -> None:
    """Print S_theta(G): every special vertex joined to all others."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        emit_graph(s_graph(g, theta, cache), fmt)


@cli.command(name="nice-sets")
@graph_options
@engine_options
def nice_sets(
    graph: str, theta: AlgebraicNumber, max_n: int | None, verbose: int
) -> None:
    """Print the maximal theta-nice sets with two or more vertices."""
    config = setup(max_n, verbose)
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        emit_json([bits(x) for x in maximal_nice_sets(g, theta, cache)])


@cli.command(name="nice-matching")
@graph_options
@click.option("--set", "set_text", help="Nice set as comma-separated vertices")
@engine_options
def nice_matching_command(
    graph: str,
    theta: AlgebraicNumber,
    set_text: str | None,
    max_n: int | None,
    verbose: int,
) -> None:
    """Match nice sets into essential partners and print the certificates.

    Without --set every maximal nice set is matched.
    """
    config = setup(max_n, verbose)
    targets = [parse_set(set_text)] if set_text is not None else None
    with command_errors(verbose):
        g = read_graph(graph, config.max_vertices)
        cache = MatchPolyCache.for_graph(g, config.cache_max_entries)
        if targets is None:
            targets = maximal_nice_sets(g, theta, cache)
        results = []
        for x in targets:
            result = nice_matching(
                g,
                theta,
                x,
                cache,
                certificate_limit=config.subset_certificate_limit,
                certificate_samples=config.random_certificate_samples,
                seed=config.seed,
            )
            results.append(
                result.to_json() | {"embedded": embed_check(g, theta, result, cache)}
            )
        emit_json(results[0] if set_text is not None else results)


def _finish_reports(
    reports: list[PropertyReport], json_path: Path | None, show_summary: bool
) -> None:
    if show_summary:
        console.print(summary_table(summarize(reports)))
    if json_path is not None:
        json_path.write_text(reports_json(reports), encoding="utf-8")
        console.print(f"[green]Wrote {len(reports)} reports to {json_path}[/green]")


@cli.command()
@click.option(
    "--corpus",
    "corpus_text",
    required=True,
    help="atlas[:...], gen:n=8,p=0.4,seed=7,count=500, example10 or a graph6 file",
)
@click.option(
    "--props",
    multiple=True,
    help="Property names, repeatable or comma-separated (default: all)",
)
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the full report list and summary here",
)
@engine_options
def verify(
    corpus_text: str,
    props: tuple[str, ...],
    json_path: Path | None,
    max_n: int | None,
    verbose: int,
) -> None:
    """Check the registered properties on a corpus.

    Exit status is 0 when no property fails; premise and cap skips are fine.
    """
    config = setup(max_n, verbose)
    names = [name.strip() for item in props for name in item.split(",") if name.strip()]
    try:
        corpus = CorpusSpec.parse(corpus_text)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--corpus") from e
    with command_errors(verbose):
        try:
            reports = run_suite(corpus, names or None, config, console)
        except KeyError as e:
            raise click.BadParameter(e.args[0], param_hint="--props") from e
        _finish_reports(reports, json_path, show_summary=True)
    failures = [r for r in reports if r.is_failure]
    if failures:
        console.print(f"[red]{len(failures)} failing reports[/red]")
        sys.exit(1)
    console.print("[green]SUCCESS: no failures[/green]")


@cli.command()
@click.option("--corpus", "corpus_text", required=True, help="Corpus, as for verify")
@click.option("--depth", type=click.IntRange(min=1), help="Number of D applications")
@click.option("--theta", type=THETA, help="Fixed theta (default: every root)")
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the reports here instead of stdout",
)
@engine_options
def explore(
    corpus_text: str,
    depth: int | None,
    theta: AlgebraicNumber | None,
    json_path: Path | None,
    max_n: int | None,
    verbose: int,
) -> None:
    """Iterate D_theta and report whether the last two iterates agree.

    Findings are informational; the exit status only reflects errors.
    """
    config = setup(max_n, verbose)
    try:
        corpus = CorpusSpec.parse(corpus_text)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--corpus") from e
    with command_errors(verbose):
        reports = explore_iterated_d(corpus, depth, theta, config, console)
        if json_path is None:
            click.echo(reports_json(reports), nl=False)
        else:
            _finish_reports(reports, json_path, show_summary=False)


@cli.command(name="replay")
@click.argument(
    "report_file", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option("--index", type=click.IntRange(min=0), help="Entry to replay")
@engine_options
def replay_command(
    report_file: Path, index: int | None, max_n: int | None, verbose: int
) -> None:
    """Re-run report entries and compare their status.

    Without --index every failing entry is replayed.
    """
    config = setup(max_n, verbose)
    with command_errors(verbose):
        reports = load_reports(report_file)
        if index is not None:
            if index >= len(reports):
                msg = f"{report_file} has {len(reports)} reports, no index {index}"
                raise click.BadParameter(msg, param_hint="--index")
            chosen = [reports[index]]
        else:
            chosen = [r for r in reports if r.is_failure]
        changed = 0
        results = []
        for entry in chosen:
            try:
                result = replay(entry, config)
            except KeyError as e:
                raise click.BadParameter(e.args[0], param_hint="REPORT_FILE") from e
            if result.status != entry.status:
                changed += 1
            results.append(result.model_dump(mode="json"))
        emit_json(results)
    if changed:
        console.print(f"[red]{changed} replayed entries changed status[/red]")
        sys.exit(1)
