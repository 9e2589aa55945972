"""graph6 interchange through networkx, with byte-level validation for error offsets."""

import logging
from collections.abc import Iterable, Iterator

import networkx as nx

from ..core.graph_ops import from_edges
from ..exceptions import Graph6ParseError
from ..models import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def strip_graph6_header(text: str) -> str:
    """Remove the optional '>>graph6<<' header and surrounding whitespace."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def _size_field(data: bytes) -> tuple[int, int]:
    """Decode N(n); returns (n, bytes consumed)."""
    if not data:
        raise Graph6ParseError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6ParseError("truncated size field", offset=len(data))
    n = 0
    for byte in data[start:start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def _validate(data: bytes) -> int:
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside 63..126", offset=offset)
    n, used = _size_field(data)
    expected = used + (n * (n - 1) // 2 + 5) // 6
    if len(data) < expected:
        raise Graph6ParseError(f"expected {expected} bytes for n={n}, got {len(data)}", offset=len(data))
    if len(data) > expected:
        raise Graph6ParseError(f"trailing data after {expected} bytes", offset=expected)
    return n


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line.

    Raises:
        Graph6ParseError: On a non-ASCII character, a byte outside 63..126, a
            truncated size field, or a body of the wrong length; the offset points
            into the stripped line
    """
    line = strip_graph6_header(text)
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError(f"non-ASCII character {line[e.start]!r}", offset=e.start) from e
    n = _validate(data)
    if n == 0:
        return from_edges(0, [])
    g = nx.from_graph6_bytes(data)
    return from_edges(n, g.edges())


def graph6_encode(g: Graph) -> str:
    """Encode g as graph6 without header or newline."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def graph6_read_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a line stream, skipping blank lines; a header line is allowed.

    Raises:
        Graph6ParseError: With the message prefixed by the 1-based line number
    """
    for number, line in enumerate(lines, start=1):
        text = strip_graph6_header(line)
        if not text:
            continue
        try:
            yield graph6_decode(text)
        except Graph6ParseError as e:
            raise Graph6ParseError(f"line {number}: {e.detail}", offset=e.offset) from e
