"""Exact stability, clique, chromatic and clique-cover numbers."""

from __future__ import annotations

from dataclasses import dataclass, field

from gaplab import kernels
from gaplab.graph import Graph, VertexSet, complement, induced_subgraph, members


class BudgetExceeded(RuntimeError):
    """Input order is above the configured budget for an exhaustive method."""


def stable_set_number(g: Graph) -> tuple[int, VertexSet]:
    """alpha(g) with the lexicographically least maximum stable set."""
    return kernels.stable_max(list(g.adj), g.full)


def clique_number(g: Graph) -> tuple[int, VertexSet]:
    return stable_set_number(complement(g))


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """chi(g) with a proper colouring given as a colour index per vertex."""
    return kernels.color_exact(list(g.adj), g.n)


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        row = g.adj[u]
        for v in members(row >> (u + 1) << (u + 1)):
            if row & g.adj[v]:
                return False
    return True


def clique_cover_number(g: Graph) -> tuple[int, list[VertexSet]]:
    """theta(g) with a minimum partition into cliques."""
    if g.n and is_triangle_free(g) and all(g.adj):
        from gaplab.matching import maximum_matching

        m = maximum_matching(g)
        parts = [(1 << u) | (1 << v) for u, v in m.edges]
        parts += [1 << v for v in members(m.exposed)]
        parts.sort(key=lambda s: s & -s)
        return g.n - m.size, parts
    k, colors = chromatic_number(complement(g))
    parts = [0] * k
    for v, c in enumerate(colors):
        parts[c] |= 1 << v
    return k, parts


# -- witness validators -------------------------------------------------------

def is_stable(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in members(s))


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((g.adj[v] | (1 << v)) & s == s for v in members(s))


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def is_clique_partition(g: Graph, parts: list[VertexSet]) -> bool:
    seen = 0
    for p in parts:
        if p & seen or not p or not is_clique(g, p):
            return False
        seen |= p
    return seen == g.full


# -- perfection -----------------------------------------------------------------

PERFECT_BUDGET = 20


def _odd_hole(g: Graph) -> list[int] | None:
    """An induced cycle of odd length >= 5, as a vertex sequence."""
    adj = g.adj
    for s in range(g.n):
        # s is the least vertex of the hole
        allowed = g.full & ~((1 << (s + 1)) - 1)

        def extend(path: list[int], body: VertexSet) -> list[int] | None:
            last = path[-1]
            for nxt in members(adj[last] & allowed & ~body):
                if adj[nxt] & body & ~(1 << s):
                    continue
                if adj[nxt] >> s & 1:
                    size = len(path) + 1
                    if size >= 5 and size % 2 and path[1] < nxt:
                        return path + [nxt]
                    continue
                found = extend(path + [nxt], body | (1 << last))
                if found:
                    return found
            return None

        for first in members(adj[s] & allowed):
            found = extend([s, first], 1 << s)
            if found:
                return found
    return None


def is_perfect(g: Graph, budget: int = PERFECT_BUDGET) -> tuple[bool, dict | None]:
    """Perfection via odd hole / odd antihole search.

    On failure the witness names the kind ("hole" or "antihole") and the
    cycle's vertex order.
    """
    if g.n > budget:
        raise BudgetExceeded(f"perfection test limited to {budget} vertices")
    hole = _odd_hole(g)
    if hole:
        return False, {"kind": "hole", "cycle": hole}
    anti = _odd_hole(complement(g))
    if anti:
        return False, {"kind": "antihole", "cycle": anti}
    return True, None


# -- greedy clique cover ---------------------------------------------------------

@dataclass(frozen=True)
class GreedyCoverDecomposition:
    """Trace of the largest-clique-first cover.

    big_cliques are the picks of size >= 3; excess records the vertices of
    each such clique beyond its two least ones, so |excess| is the sum of
    (|Q|-2).  edges are the later two-vertex picks, covering edge_covered,
    and singletons is what is left.  alpha_b is the stability number of
    edge_covered plus singletons.
    """

    big_cliques: list[VertexSet]
    excess: VertexSet
    edges: list[VertexSet]
    edge_covered: VertexSet
    singletons: VertexSet
    alpha_b: int
    gap_bound_twice: int = field(default=0)

    @property
    def gap_bound(self) -> float:
        return self.gap_bound_twice / 2

    @property
    def cover_size(self) -> int:
        return len(self.big_cliques) + len(self.edges) + self.singletons.bit_count()


def greedy_clique_cover(g: Graph) -> GreedyCoverDecomposition:
    left = g.full
    big: list[VertexSet] = []
    edges: list[VertexSet] = []
    excess = 0
    while left:
        sub = induced_subgraph(g, left)
        size, local = clique_number(sub)
        if size < 2:
            break
        verts = members(left)
        q = 0
        for k in members(local):
            q |= 1 << verts[k]
        if size >= 3:
            big.append(q)
            ms = members(q)
            for v in ms[2:]:
                excess |= 1 << v
        else:
            edges.append(q)
        left &= ~q
    covered = 0
    for e in edges:
        covered |= e
    b = covered | left
    alpha_b = stable_set_number(induced_subgraph(g, b))[0] if b else 0
    bound_twice = g.n - excess.bit_count() - alpha_b
    return GreedyCoverDecomposition(big, excess, edges, covered, left, alpha_b, bound_twice)


# -- report -----------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    n: int
    alpha: int
    omega: int
    chi: int
    theta: int
    nu: int
    zeta: int | None
    witnesses: dict

    @property
    def gap(self) -> int:
        return self.theta - self.alpha

    @property
    def chromatic_gap(self) -> int:
        return self.chi - self.omega

    def to_json(self) -> dict:
        return {
            "n": self.n, "alpha": self.alpha, "omega": self.omega, "chi": self.chi,
            "theta": self.theta, "nu": self.nu,
            "zeta": "undefined" if self.zeta is None else self.zeta,
            "gap": self.gap, "chromatic_gap": self.chromatic_gap, "witnesses": self.witnesses,
        }


def invariant_report(g: Graph) -> InvariantReport:
    from gaplab.matching import edge_cover_number, maximum_matching

    a, sa = stable_set_number(g)
    w, sw = clique_number(g)
    x, colors = chromatic_number(g)
    th, parts = clique_cover_number(g)
    m = maximum_matching(g)
    z = edge_cover_number(g)
    wit = {
        "stable_set": members(sa),
        "clique": members(sw),
        "coloring": colors,
        "clique_cover": [members(p) for p in parts],
        "matching": [list(e) for e in m.edges],
    }
    return InvariantReport(g.n, a, w, x, th, m.size, z, wit)
