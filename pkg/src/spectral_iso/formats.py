"""graph6 and plain edge-list reading/writing.

graph6 follows the published format: an order header (one byte for
n <= 62, ``~`` plus 3 bytes for n <= 258047, ``~~`` plus 6 bytes beyond),
then the upper triangle of the adjacency matrix read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per byte, each byte
offset by 63. Edge lists are 1-indexed: a line ``n m`` followed by ``m``
lines ``u v``.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph input; ``offset`` is the 0-based byte (graph6) or line (edge list)."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _byte(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise FormatError(f"byte {text[pos]!r} outside the graph6 range 63..126", pos)
    return c - 63


def _decode_order(text: str, pos: int) -> tuple[int, int]:
    if pos >= len(text):
        raise FormatError("missing order header", pos)
    if text[pos] != "~":
        return _byte(text, pos), pos + 1
    if pos + 1 < len(text) and text[pos + 1] == "~":
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    if start + width > len(text):
        raise FormatError("truncated long-form order header", len(text))
    n = 0
    for k in range(start, start + width):
        n = (n << 6) | _byte(text, k)
    return n, start + width


def _encode_order(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    s = text.strip("\r\n")
    pos = len(GRAPH6_HEADER) if s.startswith(GRAPH6_HEADER) else 0
    n, pos = _decode_order(s, pos)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise FormatError(f"truncated bit field: need {nbytes} bytes, have {len(s) - pos}", len(s))
    if len(s) - pos > nbytes:
        raise FormatError("trailing garbage after bit field", pos + nbytes)
    edges = []
    bit = 0
    u, v = 0, 1
    for k in range(nbytes):
        val = _byte(s, pos + k)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (val >> shift) & 1:
                    raise FormatError("nonzero padding bit", pos + k)
                continue
            if (val >> shift) & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, frozenset(edges))


def emit_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_order(n)]
    acc = nacc = 0
    for v in range(1, n):
        nv = g.neighbors(v)
        for u in range(v):
            acc = (acc << 1) | (u in nv)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` then ``m`` lines ``u v`` (1-indexed). Blank lines and ``#`` comments are skipped."""
    lines = []
    for lineno, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty edge list", 0)
    lineno, head = lines[0]
    try:
        n, m = (int(t) for t in head.split())
    except ValueError:
        raise FormatError(f"expected header 'n m', got {head!r}", lineno) from None
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    edges = set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v) - 1, max(u, v) - 1))
    return Graph(n, frozenset(edges))


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    """Load a graph by extension: ``.g6`` (first non-empty line) or ``.el``."""
    path = Path(path)
    text = path.read_text(encoding="ascii")
    if path.suffix == ".g6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first.strip())
    if path.suffix == ".el":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph file extension {path.suffix!r} (expected .g6 or .el)")


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
