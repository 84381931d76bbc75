"""Reader and writer for the graph6 text format (orders up to 64).

Encoding is labelled, not canonical: vertex ``i`` of the graph is vertex
``i`` of the string, and the upper triangle is written column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``), six bits per printable byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from .graph import MAX_ORDER, CapacityError, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``position`` is the 0-based offending character."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message if position is None else f"{message} (character {position})")
        self.position = position


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def _size_bytes(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    bits = 0
    count = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
        count += j
    pad = -count % 6
    bits <<= pad
    count += pad
    chunks = [chr(((bits >> shift) & 63) + 63) for shift in range(count - 6, -1, -6)]
    return _size_bytes(g.n) + "".join(chunks)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", pos)
    if text[0] == "~":
        if len(text) < 4:
            raise Graph6Error("truncated extended size field", len(text))
        if text[1] == "~":
            raise Graph6Error(f"order exceeds capacity {MAX_ORDER}", 1)
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        start = 4
        if n <= 62:
            raise Graph6Error(f"non-minimal size field for order {n}", 0)
    else:
        n = ord(text[0]) - 63
        start = 1
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
    payload = text[start:]
    need = _payload_length(n)
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: {len(payload)} of {need} bytes", len(text))
    if len(payload) > need:
        raise Graph6Error(f"trailing data: expected {need} payload bytes", start + need)
    total = n * (n - 1) // 2
    bits = 0
    for ch in payload:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = need * 6 - total
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(text) - 1)
    bits >>= pad
    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


class StreamItem(NamedTuple):
    lineno: int
    text: str
    graph: Optional[Graph]
    error: Optional[str]


def read_stream(lines: Iterable[str]) -> Iterator[StreamItem]:
    """Decode a graph6 stream line by line.

    Blank lines and a bare ``>>graph6<<`` header are skipped.  A line that
    fails to decode is yielded with ``graph=None`` and the error message;
    the stream carries on.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):].strip()
        if not text:
            continue
        try:
            yield StreamItem(lineno, text, parse_graph6(text), None)
        except ValueError as exc:
            yield StreamItem(lineno, text, None, str(exc))
