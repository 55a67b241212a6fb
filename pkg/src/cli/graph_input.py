"""Graph arguments: a literal, a file path or ``-`` for standard input.

The text is read as an edge-list JSON object when it starts with ``{`` and
as graph6 otherwise; for graph6 files only the first graph is used.
"""

import json
import logging
import sys
from pathlib import Path

from src.graphs.graph import Graph
from src.graphs.graph6 import parse_graph6

logger = logging.getLogger(__name__)


def parse_graph_text(text: str, max_vertices: int) -> Graph:
    """Decode graph6 or edge-list JSON.

    Raises:
        ValueError: On malformed input or a vertex count above the cap.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            msg = f"Malformed graph JSON: {e}"
            raise ValueError(msg) from e
        return Graph.from_edge_json(data, max_vertices)
    lines = [line for line in stripped.splitlines() if line.strip()]
    if not lines:
        msg = "No graph given"
        raise ValueError(msg)
    if len(lines) > 1:
        logger.warning(f"Using the first of {len(lines)} graphs")
    return parse_graph6(lines[0].strip(), max_vertices)


def read_graph(source: str, max_vertices: int) -> Graph:
    """Resolve ``source`` to a graph.

    Raises:
        ValueError: On malformed input.
        OSError: If a named file cannot be read.
    """
    if source == "-":
        return parse_graph_text(sys.stdin.read(), max_vertices)
    path = Path(source)
    if path.is_file():
        logger.debug(f"Reading graph from {path}")
        return parse_graph_text(path.read_text(encoding="utf-8"), max_vertices)
    return parse_graph_text(source, max_vertices)
