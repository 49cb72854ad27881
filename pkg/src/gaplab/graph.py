"""Bit-row graphs on at most 64 vertices, graph6 codec and basic surgery."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64

VertexSet = int
"""A vertex set is an int mask; bit i set means vertex i belongs to it."""


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex data."""


class CapacityError(GraphError):
    """The result would exceed the 64-vertex limit."""


class Graph6Error(ValueError):
    """Base class for graph6 parse errors."""


class MalformedHeader(Graph6Error):
    pass


class NonPrintableByte(Graph6Error):
    pass


class TrailingData(Graph6Error):
    pass


class OrderTooLarge(Graph6Error):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise CapacityError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond the vertex range")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric pair ({i}, {j})")

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.adj[i]) if j > i]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def __str__(self) -> str:
        return encode_graph6(self)


def members(mask: VertexSet) -> list[int]:
    """Vertices of a mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(~row & full & ~(1 << i) for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    if s & ~g.full:
        raise GraphError("vertex set reaches outside the graph")
    keep = members(s)
    pos = {v: k for k, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in members(g.adj[v] & s):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by least vertex."""
    out = []
    left = g.full
    while left:
        comp = frontier = left & -left
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise CapacityError("union exceeds 64 vertices")
    return Graph(g1.n + g2.n, g1.adj + tuple(r << g1.n for r in g2.adj))


def union_of(graphs: Iterable[Graph]) -> Graph:
    out = empty_graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def replicate_vertex(g: Graph, v: int) -> Graph:
    """Add a new vertex adjacent to v and to every neighbour of v."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if g.n >= MAX_ORDER:
        raise CapacityError("graph already has 64 vertices")
    new = g.n
    nbrs = g.adj[v] | (1 << v)
    rows = [row | (1 << new) if nbrs >> i & 1 else row for i, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(g.n + 1, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex i renamed perm[i]."""
    rows = [0] * g.n
    for i in range(g.n):
        for j in members(g.adj[i]):
            rows[perm[i]] |= 1 << perm[j]
    return Graph(g.n, tuple(rows))


# -- graph6 ---------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def decode_graph6(text: str) -> Graph:
    data = text.strip("\n").rstrip("\r")
    if data.startswith(">>graph6<<"):
        data = data[10:]
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise NonPrintableByte(f"byte {ord(ch)!r} outside the graph6 range 63..126")
    if not data:
        raise MalformedHeader("empty input")
    codes = [ord(c) - 63 for c in data]
    if codes[0] < 63:
        n = codes[0]
        pos = 1
    else:
        if len(codes) < 4:
            raise MalformedHeader("truncated long-form order")
        if codes[1] == 63:
            raise OrderTooLarge("eight-byte order form exceeds 64 vertices")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        pos = 4
        if n <= 62:
            raise MalformedHeader(f"long-form header used for order {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[pos:]
    if len(body) < nbytes:
        raise MalformedHeader(f"body holds {len(body)} bytes, order {n} needs {nbytes}")
    if len(body) > nbytes:
        raise TrailingData(f"{len(body) - nbytes} bytes after the adjacency data")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise TrailingData("nonzero padding bits")
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for each non-blank, non-comment line."""
    for no, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield no, decode_graph6(s)
