"""Read and write graphs: graph6 lines and plain edge lists"""
import logging

from core.graph import Graph
from utils.log import ArgumentError, GraphFormatError

logger = logging.getLogger()

GRAPH6_ENCODE_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63


def _graph6_size(data: bytes, shift: int) -> tuple[int, int]:
    """Decode N(n). Returns (n, number of header bytes)"""
    if not data:
        raise GraphFormatError("empty graph6 line", offset=shift)
    if not 63 <= data[0] <= 126:
        raise GraphFormatError(f"malformed graph6 header byte {data[0]!r}", offset=shift)
    if data[0] != 126:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphFormatError("truncated graph6 size header", offset=shift + len(data))
    n = 0
    for i in range(start, start + width):
        if not 63 <= data[i] <= 126:
            raise GraphFormatError(f"malformed graph6 header byte {data[i]!r}", offset=shift + i)
        n = (n << 6) | (data[i] - _BIAS)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text (str): graph6 string, optionally prefixed by ">>graph6<<" and
            followed by a line break

    Returns:
        Graph: the encoded graph

    Raises:
        GraphFormatError: naming the byte offset of the first offending byte
    """
    line = text.rstrip("\r\n")
    shift = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        shift = len(GRAPH6_HEADER)
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphFormatError("non-ASCII character in graph6 line", offset=shift + e.start)

    n, start = _graph6_size(data, shift)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise GraphFormatError(f"expected {nbytes} edge bytes, found {len(body)}", offset=shift + len(data))
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after graph6 body", offset=shift + start + nbytes)

    bits = 0
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} outside the graph6 range 63..126", offset=shift + start + i)
        bits = (bits << 6) | (byte - _BIAS)
    padding = nbytes * 6 - nbits
    if bits & ((1 << padding) - 1):
        raise GraphFormatError("non-zero padding bits", offset=shift + start + nbytes - 1)
    bits >>= padding

    edges = []
    k = nbits - 1
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """
    Encode a graph as a canonical graph6 line (no header, no line break).

    Raises:
        ArgumentError: when n > 62 (single-byte size header only)
    """
    if g.n > GRAPH6_ENCODE_MAX_N:
        raise ArgumentError(f"graph6 encoding supports n <= {GRAPH6_ENCODE_MAX_N}, found n={g.n}")
    out = [chr(g.n + _BIAS)]
    acc, width = 0, 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + _BIAS))
                acc, width = 0, 0
    if width:
        out.append(chr((acc << (6 - width)) + _BIAS))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """
    Parse an edge list: first token n, then one "u v" pair per line.

    Blank lines and lines starting with '#' are ignored; duplicate edges collapse.

    Raises:
        GraphFormatError: naming the 1-based line number
    """
    n = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=number)
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise GraphFormatError("first line must hold the vertex count", line=number)
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(f"expected 'u v', found {line!r}", line=number)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"label out of range 0..{n - 1} in {line!r}", line=number)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=number)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing vertex count", line=1)
    return Graph.from_edges(n, edges)


def describe(g: Graph) -> str:
    """graph6 when it fits, otherwise a short edge summary; used in messages"""
    if g.n <= GRAPH6_ENCODE_MAX_N:
        return to_graph6(g)
    return f"graph on {g.n} vertices with {g.num_edges} edges"
