"""
graph6 codec.

Size header: one byte ``n + 63`` for n <= 62; ``~`` plus three 6-bit bytes
for n <= 258047; ``~~`` plus six 6-bit bytes beyond that. The payload lists
the upper triangle in column order (0,1), (0,2), (1,2), (0,3), ... packed six
bits per byte, most significant bit first, each byte offset by 63.
"""
from typing import List, Tuple

from app.core.exceptions import (
    Graph6ByteRangeError,
    Graph6HeaderError,
    Graph6TrailingDataError,
    Graph6TruncatedError,
)
from app.graph.core import Graph

HEADER_PREFIX = ">>graph6<<"
SMALL_MAX = 62
MEDIUM_MAX = 258047
LARGE_MAX = (1 << 36) - 1


def _encode_size(n: int) -> str:
    if n < 0 or n > LARGE_MAX:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= SMALL_MAX:
        return chr(n + 63)
    if n <= MEDIUM_MAX:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def _decode_size(data: List[int]) -> Tuple[int, int]:
    """Return (n, header length)."""
    if not data:
        raise Graph6HeaderError("empty line")
    if data[0] != 63 + 63:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6HeaderError("8-byte size header is incomplete")
        n = 0
        for value in data[2:8]:
            n = (n << 6) | (value - 63)
        if n <= MEDIUM_MAX:
            raise Graph6HeaderError(f"n={n} must use a shorter header")
        return n, 8
    if len(data) < 4:
        raise Graph6HeaderError("4-byte size header is incomplete")
    n = 0
    for value in data[1:4]:
        n = (n << 6) | (value - 63)
    if n <= SMALL_MAX:
        raise Graph6HeaderError(f"n={n} must use the 1-byte header")
    return n, 4


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    text = line.strip()
    if text.startswith(HEADER_PREFIX):
        text = text[len(HEADER_PREFIX):]
    if not text:
        raise Graph6HeaderError("empty line")
    data = [ord(ch) for ch in text]
    for position, value in enumerate(data):
        if value < 63 or value > 126:
            raise Graph6ByteRangeError(f"byte {value} at offset {position} outside [63, 126]")

    n, start = _decode_size(data)
    pair_count = n * (n - 1) // 2
    payload_len = (pair_count + 5) // 6
    payload = data[start:]
    if len(payload) < payload_len:
        raise Graph6TruncatedError(f"expected {payload_len} payload bytes for n={n}, got {len(payload)}")
    if len(payload) > payload_len:
        raise Graph6TrailingDataError(f"{len(payload) - payload_len} bytes after the payload")
    padding = payload_len * 6 - pair_count
    if padding and (payload[-1] - 63) & ((1 << padding) - 1):
        raise Graph6ByteRangeError(f"nonzero padding bits in the last byte {payload[-1]}")

    rows = [0] * n
    index = 0
    u, v = 0, 1
    for value in payload:
        chunk = value - 63
        for shift in range(5, -1, -1):
            if index >= pair_count:
                break
            if chunk >> shift & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            index += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` prefix."""
    out = [_encode_size(g.n)]
    chunk = 0
    filled = 0
    adj = g.adj
    for v in range(1, g.n):
        row = adj[v]
        for u in range(v):
            chunk = (chunk << 1) | (row >> u & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)
