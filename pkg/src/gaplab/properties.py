"""Seeded property suites: structural identities and inequalities checked on
random graphs, reporting every violation with a graph6 counterexample."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from gaplab.gap import clique_helly_analysis, gap, pyramid, subset_gap_profile, triangular_claw
from gaplab.graph import (
    Graph,
    complement,
    components,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_connected,
    members,
)
from gaplab.invariants import (
    chromatic_number,
    clique_cover_number,
    clique_number,
    greedy_clique_cover,
    is_clique,
    is_clique_partition,
    is_perfect,
    is_proper_coloring,
    is_stable,
    is_triangle_free,
    stable_set_number,
)
from gaplab.matching import edge_cover_number, matching_number, simplicial_vertices

MAX_ORDER = 12


def random_graph(rng: random.Random, n_max: int = MAX_ORDER, n_min: int = 1) -> Graph:
    """Order uniform in [n_min, n_max], edge density uniform in [0.1, 0.9]."""
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.1, 0.9)
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_clique(rng: random.Random, g: Graph) -> int:
    """A clique grown from a random vertex by adding random common neighbours."""
    v = rng.randrange(g.n)
    q = 1 << v
    cand = g.adj[v]
    while cand and rng.random() < 0.8:
        u = rng.choice(members(cand))
        q |= 1 << u
        cand &= g.adj[u]
    return q


def critical_core(g: Graph) -> Graph | None:
    """A smallest induced subgraph with the same gap; it is gap-critical."""
    p = subset_gap_profile(g)
    top = p.gap_of(g.full)
    if top <= 0:
        return None
    best = min((s for s in range(g.full + 1) if p.gap_of(s) >= top),
               key=lambda s: (s.bit_count(), s))
    return induced_subgraph(g, best)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    applicable: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "applicable": self.applicable,
                "violations": self.violations, "verdict": "PASS" if self.passed else "FAIL"}


def _fail(res: SuiteResult, g: Graph, why: str) -> None:
    res.violations.append(f"{g}: {why}")


def suite_duality(rng: random.Random, count: int) -> SuiteResult:
    """Complement identities, the basic inequality chain and witness validity."""
    res = SuiteResult("duality")
    for _ in range(count):
        g = random_graph(rng)
        gc = complement(g)
        a, sa = stable_set_number(g)
        w, sw = clique_number(g)
        x, colors = chromatic_number(g)
        th, parts = clique_cover_number(g)
        res.checked += 1
        res.applicable += 1
        if w != stable_set_number(gc)[0]:
            _fail(res, g, "omega differs from alpha of the complement")
        if x != clique_cover_number(gc)[0]:
            _fail(res, g, "chi differs from theta of the complement")
        if not (x >= w and w * th >= g.n and th >= a and a * x >= g.n):
            _fail(res, g, "basic inequality chain fails")
        if not (is_stable(g, sa) and sa.bit_count() == a and is_clique(g, sw)
                and sw.bit_count() == w and is_proper_coloring(g, colors)
                and len(set(colors)) == x and is_clique_partition(g, parts) and len(parts) == th):
            _fail(res, g, "invalid witness")
    return res


def suite_gallai(rng: random.Random, count: int) -> SuiteResult:
    """nu + zeta = n without isolated vertices; theta = n - nu when also triangle-free."""
    res = SuiteResult("gallai")
    for _ in range(count):
        g = random_graph(rng, n_min=2)
        res.checked += 1
        if not is_connected(g):
            continue
        res.applicable += 1
        nu = matching_number(g)
        if nu + edge_cover_number(g) != g.n:
            _fail(res, g, "nu + zeta differs from n")
        if is_triangle_free(g) and chromatic_number(complement(g))[0] != g.n - nu:
            _fail(res, g, "theta differs from n - nu on a triangle-free graph")
    return res


def suite_components(rng: random.Random, count: int) -> SuiteResult:
    """alpha, theta and gap add up over a disjoint union and over components."""
    res = SuiteResult("components")
    for _ in range(count):
        g1 = random_graph(rng, n_max=MAX_ORDER // 2)
        g2 = random_graph(rng, n_max=MAX_ORDER - g1.n)
        u = disjoint_union(g1, g2)
        res.checked += 1
        res.applicable += 1
        if stable_set_number(u)[0] != stable_set_number(g1)[0] + stable_set_number(g2)[0]:
            _fail(res, u, "alpha not additive")
        if clique_cover_number(u)[0] != clique_cover_number(g1)[0] + clique_cover_number(g2)[0]:
            _fail(res, u, "theta not additive")
        if gap(u) != gap(g1) + gap(g2):
            _fail(res, u, "gap not additive")
        g = random_graph(rng)
        if gap(g) != sum(gap(induced_subgraph(g, c)) for c in components(g)):
            _fail(res, g, "gap not additive over components")
    return res


def _remove_clique_checks(res: SuiteResult, g: Graph, q: int, critical: bool) -> None:
    h = induced_subgraph(g, g.full & ~q)
    a, th = stable_set_number(g)[0], clique_cover_number(g)[0]
    ah, thh = stable_set_number(h)[0], clique_cover_number(h)[0]
    if not (th >= thh >= th - 1 and a >= ah >= a - 1 and th - a + 1 >= thh - ah >= th - a - 1):
        _fail(res, g, f"clique {members(q)} breaks the deletion inequalities")
    if critical and not (thh == th - 1 and ah == a and thh - ah == th - a - 1):
        _fail(res, g, f"clique {members(q)} breaks the critical-case equalities")


def suite_remove_clique(rng: random.Random, count: int) -> SuiteResult:
    """Deleting a clique moves theta, alpha and gap by at most one, with
    exact drops when the graph is gap-critical (checked on critical cores)."""
    res = SuiteResult("remove-clique")
    for _ in range(count):
        g = random_graph(rng)
        res.checked += 1
        res.applicable += 1
        _remove_clique_checks(res, g, random_clique(rng, g), False)
        core = critical_core(g)
        if core is not None:
            _remove_clique_checks(res, core, random_clique(rng, core), True)
    return res


def suite_greedy_bound(rng: random.Random, count: int) -> SuiteResult:
    """2 gap(g) <= n - |excess| - alpha(B) for the greedy clique cover."""
    res = SuiteResult("greedy-bound")
    for _ in range(count):
        g = random_graph(rng)
        d = greedy_clique_cover(g)
        res.checked += 1
        res.applicable += 1
        if 2 * gap(g) > d.gap_bound_twice:
            _fail(res, g, f"gap {gap(g)} exceeds greedy bound {d.gap_bound}")
        parts = d.big_cliques + d.edges + [1 << v for v in members(d.singletons)]
        if not is_clique_partition(g, parts):
            _fail(res, g, "greedy trace is not a clique partition")
    return res


def suite_claw(rng: random.Random, count: int) -> SuiteResult:
    """No induced triangular claw implies clique-Helly."""
    res = SuiteResult("triangular-claw")
    for _ in range(count):
        g = random_graph(rng)
        res.checked += 1
        helly, claw = clique_helly_analysis(g)
        if claw is None:
            res.applicable += 1
            if not helly:
                _fail(res, g, "no induced triangular claw but not clique-Helly")
        elif triangular_claw(induced_subgraph(g, claw)) is None:
            _fail(res, g, "reported claw is not a triangular claw")
    return res


def suite_pyramid(rng: random.Random, count: int) -> SuiteResult:
    """No induced pyramid (triangular claw with any edges among the outer
    three vertices) implies clique-Helly."""
    res = SuiteResult("pyramid")
    for _ in range(count):
        g = random_graph(rng)
        res.checked += 1
        if pyramid(g) is None:
            res.applicable += 1
            if not clique_helly_analysis(g)[0]:
                _fail(res, g, "pyramid-free but not clique-Helly")
    return res


def suite_alpha_two(rng: random.Random, count: int) -> SuiteResult:
    """alpha <= 2 and a vertex with perfect neighbourhood force gap <= 1."""
    res = SuiteResult("alpha-two")
    for _ in range(count):
        # dense graphs, so that alpha <= 2 is common
        g = complement(random_graph(rng))
        if rng.random() < 0.5:
            g = from_edges(g.n, [e for e in g.edges() if rng.random() < 0.95])
        res.checked += 1
        if stable_set_number(g)[0] > 2:
            continue
        if not any(is_perfect(induced_subgraph(g, g.adj[v]))[0] for v in range(g.n)):
            continue
        res.applicable += 1
        if gap(g) > 1:
            _fail(res, g, f"gap {gap(g)} with alpha <= 2 and a perfect neighbourhood")
    return res


def suite_critical(rng: random.Random, count: int) -> SuiteResult:
    """Gap-critical cores have no simplicial vertex and, when connected,
    theta <= ceil(n/2)."""
    res = SuiteResult("critical-cores")
    for _ in range(count):
        g = random_graph(rng)
        res.checked += 1
        core = critical_core(g)
        if core is None:
            continue
        res.applicable += 1
        if simplicial_vertices(core):
            _fail(res, core, "gap-critical graph has a simplicial vertex")
        if is_connected(core) and clique_cover_number(core)[0] > (core.n + 1) // 2:
            _fail(res, core, "connected gap-critical graph has theta above ceil(n/2)")
    return res


SUITES: dict[str, Callable[[random.Random, int], SuiteResult]] = {
    "duality": suite_duality,
    "gallai": suite_gallai,
    "components": suite_components,
    "remove-clique": suite_remove_clique,
    "greedy-bound": suite_greedy_bound,
    "triangular-claw": suite_claw,
    "pyramid": suite_pyramid,
    "alpha-two": suite_alpha_two,
    "critical-cores": suite_critical,
}


def run_suite(name: str, count: int = 10_000, seed: int = 0) -> SuiteResult:
    """Each suite draws from its own generator seeded by (seed, name)."""
    return SUITES[name](random.Random(f"{seed}:{name}"), count)
