"""Graph interchange formats: graph6, edge lists, and DOT export.

graph6 is the compact printable encoding used by nauty and friends: a size
prefix N(n) followed by the upper triangle of the adjacency matrix in
column-major order, packed six bits per byte with 63 added to keep every
byte in the printable range 63..126.  Decoding errors carry the byte
offset at which the record went wrong.

The edge-list format is line oriented UTF-8: one ``u v`` pair per line,
``#`` starts a comment, blank lines are skipped, and ``vertex w`` declares
a vertex without edges (``vertex`` is a reserved word, not a usable
label).
"""

from __future__ import annotations

from .graph import Graph, GraphError, bits, default_labels

GRAPH6_HEADER = b">>graph6<<"

_MAX_GRAPH6_N = (1 << 36) - 1


class FormatError(GraphError):
    """Unparseable input; ``offset`` or ``line`` locates the problem."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


def _as_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        return data.encode("ascii", errors="replace")
    return data


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is fine).

    Vertices get the default labels "0".."n-1".  Raises
    :class:`FormatError` with a byte offset on malformed input.
    """
    raw = _as_bytes(data).rstrip(b"\r\n")
    base = 0
    if raw.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        raw = raw[base:]
    if not raw:
        raise FormatError("empty graph6 record: missing length prefix", offset=base)
    for i, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise FormatError(f"byte {byte} outside graph6 range 63..126", offset=base + i)

    # Length prefix N(n).
    pos = 0
    if raw[0] != 126:
        n = raw[0] - 63
        pos = 1
    elif len(raw) >= 2 and raw[1] != 126:
        if len(raw) < 4:
            raise FormatError("truncated 3-byte length prefix", offset=base + len(raw))
        n = 0
        for byte in raw[1:4]:
            n = n << 6 | (byte - 63)
        pos = 4
        if n < 63:
            raise FormatError("non-canonical length prefix", offset=base)
    else:
        if len(raw) < 8:
            raise FormatError("truncated 6-byte length prefix", offset=base + len(raw))
        n = 0
        for byte in raw[2:8]:
            n = n << 6 | (byte - 63)
        pos = 8
        if n < 258048:
            raise FormatError("non-canonical length prefix", offset=base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[pos:]
    if len(body) < nbytes:
        raise FormatError(
            f"truncated bit stream: need {nbytes} adjacency bytes, got {len(body)}",
            offset=base + len(raw),
        )
    if len(body) > nbytes:
        raise FormatError("trailing data after adjacency bits", offset=base + pos + nbytes)

    rows = [0] * n
    i, j = 0, 1
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            if j >= n:
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(default_labels(n), tuple(rows))


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 for its current vertex order (no relabeling)."""
    n = g.n
    if n > _MAX_GRAPH6_N:
        raise FormatError(f"graph6 cannot encode n={n}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.append((n >> 12 & 63) + 63)
        out.append((n >> 6 & 63) + 63)
        out.append((n & 63) + 63)
    else:
        out.append(126)
        out.append(126)
        for shift in (30, 24, 18, 12, 6, 0):
            out.append((n >> shift & 63) + 63)
    value = 0
    count = 0
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (g.rows[i] >> j & 1)
            count += 1
            if count == 6:
                out.append(value + 63)
                value = 0
                count = 0
    if count:
        out.append((value << (6 - count)) + 63)
    return bytes(out)


def iter_graph6_records(data: bytes) -> list[bytes]:
    """Split a newline-separated graph6 stream into raw records.

    A single leading ``>>graph6<<`` header is stripped, whether it sits on
    its own line or is glued to the first record.  Blank lines are
    dropped; records are otherwise returned verbatim for the caller to
    parse (and to report offsets against).
    """
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    records = []
    for chunk in data.splitlines():
        chunk = chunk.strip()
        if chunk:
            records.append(chunk)
    return records


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format into a Graph.

    Vertex order is first mention.  Duplicate edges are idempotent.
    Raises :class:`FormatError` with a 1-based line number for self loops
    and unparseable lines.
    """
    order: list[str] = []
    seen: dict[str, int] = {}

    def intern(label: str) -> int:
        if label not in seen:
            seen[label] = len(order)
            order.append(label)
        return seen[label]

    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise FormatError("'vertex' line must name exactly one vertex", line=lineno)
            intern(parts[1])
            continue
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = parts
        if u == v:
            raise FormatError(f"self loop at {u!r}", line=lineno)
        edges.append((intern(u), intern(v)))

    rows = [0] * len(order)
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(tuple(order), tuple(rows))


def write_edge_list(g: Graph) -> str:
    """Render ``g`` in the edge-list format, round-trip exact.

    Every vertex is declared with a ``vertex`` line (preserving order and
    isolated vertices), then the edges follow.
    """
    for label in g.labels:
        if label == "vertex" or not label or any(c.isspace() for c in label) or "#" in label:
            raise FormatError(f"label {label!r} cannot be written in edge-list format")
    lines = [f"vertex {label}" for label in g.labels]
    lines.extend(f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dot(g: Graph) -> str:
    """DOT export for visual inspection only; not a parse target."""

    def quote(label: str) -> str:
        return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph {"]
    for v, label in enumerate(g.labels):
        if not g.rows[v]:
            lines.append(f"  {quote(label)};")
    for u, v in g.edges():
        lines.append(f"  {quote(g.labels[u])} -- {quote(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sniff_format(data: bytes) -> str:
    """Guess ``graph6`` or ``edges`` from raw content."""
    sample = data.lstrip()
    if sample.startswith(GRAPH6_HEADER):
        return "graph6"
    first = sample.splitlines()[0] if sample else b""
    if first and all(63 <= b <= 126 for b in first):
        return "graph6"
    return "edges"
