"""Graph readers and writers: plain edge-list text and graph6.

Edge-list format: first line "n m", then m lines "u v". graph6 follows the
published byte-level format (McKay), including the optional ">>graph6<<"
header on input. Both round-trip exactly.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, from_edges

GRAPH6_HEADER = ">>graph6<<"


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def _g6_encode_n(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("vertex count too large for graph6")


def _g6_decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise GraphError("empty graph6 data")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = 0
        for c in data[1:4]:
            n = n << 6 | (c - 63)
        return n, data[4:]
    if len(data) < 8:
        raise GraphError("truncated graph6 size field")
    n = 0
    for c in data[2:8]:
        n = n << 6 | (c - 63)
    return n, data[8:]


def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 string (no header, no trailing newline)."""
    bits = []
    for v in range(1, g.n):
        row = g.row(v)
        bits.extend((row >> u) & 1 for u in range(v))
    out = bytearray(_g6_encode_n(g.n))
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def read_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    data = line.encode("ascii")
    n, body = _g6_decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for c in body:
        v = c - 63
        if not 0 <= v <= 63:
            raise GraphError(f"invalid graph6 byte {c}")
        bits.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise GraphError("nonzero padding bits in graph6 data")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return from_edges(n, edges)


FORMATS = ("edgelist", "g6")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return write_edge_list(g)
    if fmt == "g6":
        return write_graph6(g) + "\n"
    raise GraphError(f"unknown format {fmt!r}")


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return read_edge_list(text)
    if fmt == "g6":
        return read_graph6(text)
    raise GraphError(f"unknown format {fmt!r}")
