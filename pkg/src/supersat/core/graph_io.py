"""Graph file formats: the "n m" edge list and header-free graph6."""

from pathlib import Path

import networkx as nx

from supersat.core.config import GraphFormat
from supersat.core.errors import ParseError, UnsupportedHeader
from supersat.core.graph import Graph

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MIN_BYTE = 63
GRAPH6_MAX_BYTE = 126


def write_edge_list(g: Graph) -> bytes:
    """Encode as "n m" followed by one sorted "u v" line per edge."""
    edge_list = g.to_edge_list()
    lines = [
        f"{edge_list.n} {len(edge_list.edges)}",
        *(f"{u} {v}" for u, v in edge_list.edges),
    ]
    return ("\n".join(lines) + "\n").encode("ascii")


def read_edge_list(data: bytes) -> Graph:
    """Decode the edge-list format.

    Edges may come in any order or orientation; they are stored canonically.

    Raises:
        ParseError: With the 1-based line number of the first bad line.

    """
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        msg = "edge list must be ASCII"
        raise ParseError(msg, offset=e.start) from e

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        msg = "missing 'n m' header"
        raise ParseError(msg, line=1)

    n, m = _parse_pair(lines[0], 1)
    body = lines[1:]
    if len(body) != m:
        msg = f"header announces {m} edges, found {len(body)}"
        # first missing line, or first surplus line
        raise ParseError(msg, line=len(lines) + 1 if len(body) < m else m + 2)

    rows = [0] * n
    for index, line in enumerate(body, start=2):
        u, v = _parse_pair(line, index)
        if u >= n or v >= n:
            msg = f"endpoint outside [0, {n})"
            raise ParseError(msg, line=index)
        if u == v:
            msg = f"self-loop at vertex {u}"
            raise ParseError(msg, line=index)
        if rows[u] >> v & 1:
            msg = f"duplicate edge {min(u, v)} {max(u, v)}"
            raise ParseError(msg, line=index)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def _parse_pair(line: str, line_number: int) -> tuple[int, int]:
    fields = line.strip().split()
    if len(fields) != 2 or not all(field.isdigit() for field in fields):
        msg = f"expected two nonnegative integers, got {line!r}"
        raise ParseError(msg, line=line_number)
    return int(fields[0]), int(fields[1])


def write_graph6(g: Graph) -> bytes:
    """Standard header-free graph6, newline terminated."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False)


def read_graph6(data: bytes) -> Graph:
    """Decode one graph6 record.

    Raises:
        UnsupportedHeader: sparse6, digraph6 or a foreign ``>>...<<`` header.
        ParseError: A byte outside the printable graph6 range, or a bad length.

    """
    record = data.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER) :]
    elif record.startswith(b">>"):
        msg = f"unsupported header {record.split(b'<<')[0].decode(errors='replace')}<<"
        raise UnsupportedHeader(msg)
    if record[:1] in (b":", b";"):
        msg = "sparse6 input is not supported"
        raise UnsupportedHeader(msg)
    if record[:1] == b"&":
        msg = "digraph6 input is not supported"
        raise UnsupportedHeader(msg)
    if not record:
        msg = "empty graph6 record"
        raise ParseError(msg, offset=0)

    for offset, byte in enumerate(record):
        if not GRAPH6_MIN_BYTE <= byte <= GRAPH6_MAX_BYTE:
            msg = f"byte {byte!r} outside the graph6 alphabet"
            raise ParseError(msg, offset=offset)

    try:
        graph = nx.from_graph6_bytes(record)
    except nx.NetworkXError as e:
        raise ParseError(str(e), offset=0) from e

    return Graph.from_edges(
        graph.number_of_nodes(),
        ((min(u, v), max(u, v)) for u, v in graph.edges()),
    )


def read_graph(data: bytes, fmt: GraphFormat) -> Graph:
    """Decode ``data`` in the given format."""
    if fmt is GraphFormat.GRAPH6:
        return read_graph6(data)
    return read_edge_list(data)


def write_graph(g: Graph, fmt: GraphFormat) -> bytes:
    """Encode ``g`` in the given format."""
    if fmt is GraphFormat.GRAPH6:
        return write_graph6(g)
    return write_edge_list(g)


def guess_format(path: Path) -> GraphFormat:
    """graph6 for ``.g6``/``.graph6`` files, edge list otherwise."""
    if path.suffix.lower() in {".g6", ".graph6"}:
        return GraphFormat.GRAPH6
    return GraphFormat.EDGE_LIST
