"""Maximum matchings (Edmonds' blossom algorithm) and matching-based tests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from gaplab.graph import Graph, VertexSet, induced_subgraph, members


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: list[tuple[int, int]]
    exposed: VertexSet

    def to_json(self) -> dict:
        return {"size": self.size, "edges": [list(e) for e in self.edges],
                "exposed": members(self.exposed)}


def _blossom(n: int, nbrs: list[list[int]]) -> list[int]:
    match = [-1] * n

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # flip the augmenting path ending at `to`
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to] = pv
                            match[pv] = to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return match


def maximum_matching(g: Graph) -> MatchingResult:
    nbrs = [members(r) for r in g.adj]
    match = _blossom(g.n, nbrs)
    edges = [(v, match[v]) for v in range(g.n) if match[v] > v]
    exposed = 0
    for v in range(g.n):
        if match[v] == -1:
            exposed |= 1 << v
    return MatchingResult(len(edges), edges, exposed)


def matching_number(g: Graph, within: VertexSet | None = None) -> int:
    if within is not None and within != g.full:
        g = induced_subgraph(g, within)
    return maximum_matching(g).size


def has_perfect_matching(g: Graph, within: VertexSet | None = None) -> bool:
    s = g.full if within is None else within
    size = s.bit_count()
    return size % 2 == 0 and 2 * matching_number(g, s) == size


def edge_cover_number(g: Graph) -> int | None:
    """zeta = n - nu, or None when some vertex is isolated."""
    if any(row == 0 for row in g.adj):
        return None
    return g.n - maximum_matching(g).size


def is_factor_critical(g: Graph) -> tuple[bool, int | None]:
    """Every one-vertex deletion has a perfect matching; witness is a failing vertex."""
    if g.n % 2 == 0:
        return False, 0 if g.n else None
    for v in range(g.n):
        if not has_perfect_matching(g, g.full & ~(1 << v)):
            return False, v
    return True, None


def is_bicritical(g: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Every two-vertex deletion has a perfect matching; witness is a failing pair."""
    for u, v in combinations(range(g.n), 2):
        if not has_perfect_matching(g, g.full & ~(1 << u) & ~(1 << v)):
            return False, (u, v)
    return True, None


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Internally vertex-disjoint s-t paths, via unit-capacity max-flow."""
    n = g.n
    # node 2v is v_in, 2v+1 is v_out; the in->out arc has capacity 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs."""
    if g.n == 0:
        raise ValueError("connectivity needs at least one vertex")
    best = g.n - 1
    for s in range(g.n):
        for t in members(~g.adj[s] & g.full & ~((1 << (s + 1)) - 1)):
            best = min(best, _local_connectivity(g, s, t))
            if best == 0:
                return 0
    return best


def simplicial_vertices(g: Graph) -> VertexSet:
    out = 0
    for v in range(g.n):
        nb = g.adj[v]
        if all(nb & ~(1 << u) & ~g.adj[u] == 0 for u in members(nb)):
            out |= 1 << v
    return out
