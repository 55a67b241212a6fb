"""graph6 encoding and decoding.

Vertex count ``n < 63`` is one character ``chr(63 + n)``; larger ``n`` uses
``~`` followed by three characters carrying 18 bits. The upper triangle of the
adjacency matrix follows column by column (``x(0,1), x(0,2), x(1,2), ...``),
packed six bits per character with offset 63 and zero padding.
"""

import logging
from collections.abc import Iterator
from pathlib import Path

from .graph import MAX_VERTICES, Graph, check_vertex_cap

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047


class Graph6Error(ValueError):
    """Malformed graph6 text.

    Attributes:
        detail: Description without the position suffix.
        offset: Byte offset of the offending character in the input.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.detail = message
        self.offset = offset


def _value(text: str, pos: int) -> int:
    code = ord(text[pos])
    if not 63 <= code <= 126:
        msg = f"Character {text[pos]!r} outside the graph6 range"
        raise Graph6Error(msg, pos)
    return code - 63


def parse_graph6(text: str, max_vertices: int = MAX_VERTICES) -> Graph:
    """Decode one graph6 string.

    Args:
        text: Encoded graph, optionally prefixed by ``>>graph6<<`` and
            followed by a newline.
        max_vertices: Largest accepted vertex count.

    Raises:
        Graph6Error: On empty input, bad characters, a wrong body length or a
            vertex count above ``max_vertices``.
    """
    start = len(HEADER) if text.startswith(HEADER) else 0
    data = text.rstrip("\r\n")
    if len(data) <= start:
        msg = "Empty graph6 string"
        raise Graph6Error(msg, start)

    pos = start
    first = _value(data, pos)
    if first < 63:
        n = first
        pos += 1
    else:
        if len(data) < pos + 4:
            msg = "Truncated vertex-count header"
            raise Graph6Error(msg, len(data))
        if _value(data, pos + 1) == 63:
            msg = "Eight-byte vertex counts are not supported"
            raise Graph6Error(msg, pos + 1)
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _value(data, pos + k)
        pos += 4

    try:
        check_vertex_cap(n, max_vertices)
    except ValueError as e:
        raise Graph6Error(str(e), start) from e

    needed_bits = n * (n - 1) // 2
    needed_chars = -(-needed_bits // 6)
    body = data[pos:]
    if len(body) != needed_chars:
        msg = f"Expected {needed_chars} body characters for n={n}, got {len(body)}"
        raise Graph6Error(msg, pos + min(len(body), needed_chars))

    values = [_value(data, pos + idx) for idx in range(needed_chars)]
    edges: list[tuple[int, int]] = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            char_index, bit = divmod(k, 6)
            if values[char_index] >> (5 - bit) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode the compacted view of ``g`` without header or newline."""
    compact, _ = g.compact()
    n = compact.n
    if n <= _SHORT_LIMIT:
        out = [chr(63 + n)]
    elif n <= _MEDIUM_LIMIT:
        out = ["~"] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    else:
        msg = f"Graph with {n} vertices is too large for graph6"
        raise ValueError(msg)

    bits: list[int] = []
    for j in range(1, n):
        row = compact.adjacency[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    for chunk in range(0, len(bits), 6):
        value = 0
        for b in bits[chunk : chunk + 6]:
            value = (value << 1) | b
        out.append(chr(63 + value))
    return "".join(out)


def read_graph6_file(path: Path, max_vertices: int = MAX_VERTICES) -> Iterator[Graph]:
    """Yield the graphs of a graph6 file, one per nonblank line."""
    with path.open(encoding="ascii") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line, max_vertices)
            except Graph6Error as e:
                msg = f"{path}:{lineno}: {e.detail}"
                raise Graph6Error(msg, e.offset) from e
