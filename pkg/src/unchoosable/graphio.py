"""Graph file formats: graph6 (bit-exact) and adjacency JSON.

graph6 packs the upper triangle of the adjacency matrix column by column
(x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) into 6-bit groups offset by 63.
It carries no labels.  The adjacency-JSON format
``{"n": int, "edges": [[u,v], ...], "labels": {"v": [...], "w": [...]}}``
keeps edges sorted lexicographically and preserves role labels.
"""

from __future__ import annotations

import json

from .errors import InvalidArgumentError, ParseError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise InvalidArgumentError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    """Canonical graph6 string for `g` (no header, no newline)."""
    out = bytearray(_encode_size(g.n))
    buf = 0
    filled = 0
    for v in range(1, g.n):
        column = g.adj[v]
        for u in range(v):
            buf = buf << 1 | (column >> u & 1)
            filled += 1
            if filled == 6:
                out.append(buf + 63)
                buf = 0
                filled = 0
    if filled:
        out.append((buf << (6 - filled)) + 63)
    return out.decode("ascii")


def read_graph6(text: str) -> Graph:
    """Parse one graph6 string (optional >>graph6<< header, surrounding
    whitespace tolerated).  Raises ParseError with the byte offset of the
    first offending byte."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 input", offset=0)
    for i, b in enumerate(data):
        if not (63 <= b <= 126):
            raise ParseError(f"invalid graph6 byte {b:#x}", offset=i)

    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", offset=len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) - pos < ngroups:
        raise ParseError(
            f"truncated graph6 edge data: need {ngroups} bytes, have {len(data) - pos}",
            offset=len(data),
        )
    if len(data) - pos > ngroups:
        raise ParseError("trailing bytes after graph6 edge data", offset=pos + ngroups)

    edges = []
    v, u = 1, 0
    for gi in range(ngroups):
        group = data[pos + gi] - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if v >= n:
                if bit:
                    raise ParseError("nonzero padding bit", offset=pos + gi)
                continue
            if bit:
                edges.append((u, v))
            u += 1
            if u == v:
                v += 1
                u = 0
    return Graph.from_edges(n, edges)


def write_adjacency_json(g: Graph) -> str:
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels:
        groups: dict[str, list[int]] = {}
        for v, tag in g.labels:
            groups.setdefault(tag, []).append(v)
        doc["labels"] = {tag: sorted(vs) for tag, vs in sorted(groups.items())}
    return json.dumps(doc)


def read_adjacency_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", offset=e.pos) from e
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int):
        raise ParseError("adjacency JSON must be an object with integer 'n'")
    n = doc["n"]
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list of [u, v] pairs")
    edges = []
    for e in raw_edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"bad edge entry {e!r}")
        edges.append(tuple(e))
    if len(set(tuple(sorted(e)) for e in edges)) != len(edges):
        raise ParseError("duplicate edges in adjacency JSON")
    labels = None
    if "labels" in doc:
        if not isinstance(doc["labels"], dict):
            raise ParseError("'labels' must be an object of tag -> [ids]")
        labels = {}
        for tag, vs in doc["labels"].items():
            for v in vs:
                if not isinstance(v, int):
                    raise ParseError(f"bad label id {v!r} under tag {tag!r}")
                if v in labels:
                    raise ParseError(f"vertex {v} labeled twice")
                labels[v] = tag
    try:
        return Graph.from_edges(n, edges, labels)
    except InvalidArgumentError as e:
        raise ParseError(str(e)) from e


def write_graph(g: Graph, path: str) -> None:
    """Write by extension: .g6/.graph6 -> graph6, anything else -> JSON."""
    if path.endswith((".g6", ".graph6")):
        payload = write_graph6(g) + "\n"
    else:
        payload = write_adjacency_json(g) + "\n"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(payload)


def read_graph(path: str) -> Graph:
    """Read by extension, falling back to content sniffing."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if path.endswith((".g6", ".graph6")):
        return read_graph6(text)
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return read_adjacency_json(text)
    return read_graph6(text)
