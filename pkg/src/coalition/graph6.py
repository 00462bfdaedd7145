"""Bit-exact graph6 codec.

Layout: a length field (one byte n+63 for n <= 62, else '~' and three
bytes carrying n in 18 big-endian bits, 6 per byte, each +63), followed by
the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ...
packed big-endian into 6-bit groups, zero-padded, each group +63.  All
payload bytes are printable ASCII 63..126.  sparse6 is deliberately not
supported.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graphs import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optional '>>graph6<<' header tolerated)."""
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] == ":":
        raise Graph6Error("sparse6 input is not supported, only graph6")
    if s[0] == "&":
        raise Graph6Error("digraph6 input is not supported, only graph6")
    data = [ord(c) - 63 for c in s]
    for i, c in enumerate(s):
        if not 63 <= ord(c) <= 126:
            raise Graph6Error(f"byte {i} ({c!r}) outside graph6 range 63..126")

    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        # '~' prefix: 18-bit order in the next three bytes
        if len(data) < 4:
            raise Graph6Error("truncated long-form length field")
        if data[1] == 63:
            raise Graph6Error("8-byte length form implies n > 258047, unsupported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}")

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(body) != ngroups:
        raise Graph6Error(
            f"payload holds {len(body)} groups, expected {ngroups} for n={n}"
        )

    adj = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            g, off = divmod(idx, 6)
            if body[g] & (1 << (5 - off)):
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            idx += 1
    # trailing pad bits must be zero
    if nbits % 6:
        pad = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(adj))


def encode_graph6(G: Graph) -> str:
    """Encode a Graph as its canonical graph6 string."""
    n = G.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]

    nbits = n * (n - 1) // 2
    groups = [0] * ((nbits + 5) // 6)
    idx = 0
    for col in range(1, n):
        colbit = 1 << col
        for row in range(col):
            if G.adj[row] & colbit:
                g, off = divmod(idx, 6)
                groups[g] |= 1 << (5 - off)
            idx += 1
    return "".join(chr(b) for b in head) + "".join(chr(g + 63) for g in groups)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a line stream, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6_lines(fh))
