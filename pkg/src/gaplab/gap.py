"""Covering gap, criticality over all induced subgraphs, and clique-Helly tests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from gaplab import kernels
from gaplab.graph import Graph, VertexSet, complement, members
from gaplab.invariants import BudgetExceeded, clique_cover_number, stable_set_number

PROFILE_BUDGET = 16


def gap(g: Graph) -> int:
    return clique_cover_number(g)[0] - stable_set_number(g)[0]


def chromatic_gap(g: Graph) -> int:
    return gap(complement(g))


@dataclass(frozen=True)
class SubsetGapProfile:
    """alpha and theta of every induced subgraph, indexed by vertex mask."""

    host: Graph
    alpha_of: bytes
    theta_of: bytes

    def gap_of(self, s: VertexSet) -> int:
        return self.theta_of[s] - self.alpha_of[s]

    def max_proper_gap(self) -> int:
        full = self.host.full
        return max((self.gap_of(s) for s in range(full)), default=0)


def subset_gap_profile(g: Graph, budget: int = PROFILE_BUDGET) -> SubsetGapProfile:
    if g.n > budget:
        raise BudgetExceeded(f"subset profile limited to {budget} vertices (got {g.n})")
    a, t = kernels.subset_profile(list(g.adj), g.n)
    return SubsetGapProfile(g, a, t)


@dataclass(frozen=True)
class CriticalityVerdict:
    full_critical: bool
    weak_critical: bool
    witness: VertexSet | None

    def to_json(self) -> dict:
        return {"full_critical": self.full_critical, "weak_critical": self.weak_critical,
                "witness": None if self.witness is None else members(self.witness)}


def is_gap_critical(g: Graph, budget: int = PROFILE_BUDGET,
                    profile: SubsetGapProfile | None = None) -> CriticalityVerdict:
    """Every proper induced subgraph has a smaller gap.

    The witness, when not critical, is a smallest proper subset whose gap
    is not smaller, least mask first among equals.
    """
    p = profile or subset_gap_profile(g, budget)
    full = g.full
    top = p.gap_of(full)
    weak = all(p.gap_of(full & ~(1 << v)) < top for v in range(g.n))
    witness = None
    for s in range(full):
        if p.gap_of(s) >= top:
            if witness is None or (s.bit_count(), s) < (witness.bit_count(), witness):
                witness = s
    return CriticalityVerdict(witness is None, weak, witness)


def gap_chain(g: Graph, budget: int = PROFILE_BUDGET,
              profile: SubsetGapProfile | None = None) -> list[tuple[VertexSet, int]]:
    """Nested vertex sets whose gaps run through gap(g), gap(g)-1, ..., 0.

    Built by single-vertex deletions: from the current set remove the least
    vertex that lowers the gap, or failing that the least vertex at all.
    """
    p = profile or subset_gap_profile(g, budget)
    cur = g.full
    g0 = p.gap_of(cur)
    chain = [(cur, g0)]
    want = g0 - 1
    while want >= 0:
        vs = members(cur)
        drop = next((v for v in vs if p.gap_of(cur & ~(1 << v)) < p.gap_of(cur)), vs[0])
        cur &= ~(1 << drop)
        if p.gap_of(cur) == want:
            chain.append((cur, want))
            want -= 1
    return chain


def perfectness_gap(g: Graph, budget: int = PROFILE_BUDGET) -> int:
    p = subset_gap_profile(g, budget)
    q = subset_gap_profile(complement(g), budget)
    return max(max(p.gap_of(s), q.gap_of(s)) for s in range(g.full + 1))


# -- clique-Helly ------------------------------------------------------------

HELLY_BUDGET = 20


def _triangles(g: Graph):
    for a in range(g.n):
        for b in members(g.adj[a] >> (a + 1) << (a + 1)):
            for c in members(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def _claw_pattern(g: Graph, stable: bool) -> VertexSet | None:
    adj = g.adj
    for a, b, c in _triangles(g):
        tri = (1 << a) | (1 << b) | (1 << c)

        def sees_exactly(u: int, v: int, miss: int) -> VertexSet:
            return adj[u] & adj[v] & ~adj[miss] & ~tri

        xs, ys, zs = sees_exactly(b, c, a), sees_exactly(a, c, b), sees_exactly(a, b, c)
        for x in members(xs):
            keep_x = ~adj[x] if stable else ~0
            for y in members(ys & keep_x & ~(1 << x)):
                keep_y = ~adj[y] if stable else ~0
                for z in members(zs & keep_x & keep_y & ~(1 << x) & ~(1 << y)):
                    return tri | (1 << x) | (1 << y) | (1 << z)
    return None


def triangular_claw(g: Graph) -> VertexSet | None:
    """An induced triangle plus three pairwise non-adjacent vertices, each
    seeing exactly the two corners opposite its own."""
    return _claw_pattern(g, True)


def pyramid(g: Graph) -> VertexSet | None:
    """Like triangular_claw, but the three outer vertices may be adjacent.

    Graphs without this pattern are hereditary clique-Helly; the stable
    variant alone does not guarantee clique-Helly (e.g. graph6 Ezn?).
    """
    return _claw_pattern(g, False)


def clique_helly_analysis(g: Graph, budget: int = HELLY_BUDGET) -> tuple[bool, VertexSet | None]:
    """Exact clique-Helly test plus an induced triangular claw if present.

    For every triangle, the vertices adjacent to at least two of its corners
    (the corners included) must contain one vertex adjacent to all others.
    """
    if g.n > budget:
        raise BudgetExceeded(f"clique-Helly analysis limited to {budget} vertices")
    adj = g.adj
    helly = True
    for a, b, c in _triangles(g):
        ext = (adj[a] & adj[b]) | (adj[a] & adj[c]) | (adj[b] & adj[c])
        ext |= (1 << a) | (1 << b) | (1 << c)
        if not any(ext & ~(1 << u) & ~adj[u] == 0 for u in members(ext)):
            helly = False
            break
    return helly, triangular_claw(g)


def two_disjoint_triangles(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    tris = [(1 << a) | (1 << b) | (1 << c) for a, b, c in _triangles(g)]
    for s, t in combinations(tris, 2):
        if not s & t:
            return s, t
    return None
