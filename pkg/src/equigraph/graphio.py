"""Graph serialization: standard graph6 strings and a plain edge-list format.

The edge-list format is an "n m" header line followed by m lines "u v"
with 0-based endpoints.  graph6 follows the published format: N(n) then
the upper triangle packed column by column into 6-bit groups offset by 63.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, ParseError, ValidationError
from .graphs import Graph

FORMATS = ("graph6", "edgelist")

GRAPH6_HEADER = ">>graph6<<"
_G6_MIN, _G6_MAX = 63, 126


@dataclass(frozen=True)
class GraphDocument:
    format: str
    payload: str

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ParameterError(f"unknown graph format {self.format!r}; choose from {FORMATS}")


def parse_graph(doc: GraphDocument) -> Graph:
    if doc.format == "graph6":
        return decode_graph6(doc.payload)
    return decode_edgelist(doc.payload)


def emit_graph(G: Graph, format: str) -> GraphDocument:
    if format == "graph6":
        return GraphDocument("graph6", encode_graph6(G))
    if format == "edgelist":
        return GraphDocument("edgelist", encode_edgelist(G))
    raise ParameterError(f"unknown graph format {format!r}; choose from {FORMATS}")


def detect_format(payload: str) -> str:
    """Sniff a payload: a leading integer pair means edge list, else graph6.

    Unambiguous because digits and whitespace are outside the graph6 byte
    range [63, 126] at the head position.
    """
    stripped = payload.strip()
    if stripped.startswith(GRAPH6_HEADER):
        return "graph6"
    head = stripped.split("\n", 1)[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        return "edgelist"
    return "graph6"


# ---------------------------------------------------------------------------
# edge list
# ---------------------------------------------------------------------------

def decode_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise ParseError("empty edge-list document")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: header must be two integers, got {header!r}") from exc
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative counts in header {header!r}")
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges but document has {len(rows) - 1} edge lines")
    edges = set()
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: edge must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: edge endpoints must be integers, got {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"line {lineno}: endpoint out of range 0..{n - 1}: {ln!r}")
        if u == v:
            raise ValidationError(f"line {lineno}: loop at vertex {u} not allowed")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ValidationError(f"line {lineno}: duplicate edge {key}")
        edges.add(key)
    return Graph(n, frozenset(edges))


def encode_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def encode_graph6(G: Graph) -> str:
    n = G.n
    out = _encode_g6_order(n)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in G.edges else 0)
    for base in range(0, len(bits), 6):
        group = bits[base:base + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out += chr(val + 63)
    return out


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise ParseError("empty graph6 document")
    if "\n" in s:
        raise ParseError("graph6 payload must be a single line")
    for pos, ch in enumerate(s):
        if not _G6_MIN <= ord(ch) <= _G6_MAX:
            raise ParseError(f"byte {pos}: character {ch!r} outside graph6 range")
    n, body = _decode_g6_order(s)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    nbits = n * (n - 1) // 2
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body")
    edges = set()
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.add((i, j))
            idx += 1
    return Graph(n, frozenset(edges))


def _encode_g6_order(n: int) -> str:
    if n < 0:
        raise ParameterError("vertex count must be nonnegative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))
    raise ParameterError(f"vertex count {n} too large for graph6")


def _decode_g6_order(s: str) -> tuple[int, str]:
    if s[0] != "~":
        return ord(s[0]) - 63, s[1:]
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ParseError("truncated graph6 order field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, s[4:]
    if len(s) < 8:
        raise ParseError("truncated graph6 order field")
    n = 0
    for ch in s[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, s[8:]
