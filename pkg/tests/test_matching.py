import itertools

from gaplab.constructions import complete, cycle, named_graph
from gaplab.graph import disjoint_union, empty_graph, from_edges, induced_subgraph, is_connected
from gaplab.matching import (
    edge_cover_number,
    has_perfect_matching,
    is_bicritical,
    is_factor_critical,
    matching_number,
    maximum_matching,
    simplicial_vertices,
    vertex_connectivity,
)


def _brute_nu(g):
    edges = list(g.edges())
    best = 0
    for k in range(1, g.n // 2 + 1):
        for sub in itertools.combinations(edges, k):
            used = [v for e in sub for v in e]
            if len(set(used)) == len(used):
                best = k
                break
        else:
            break
    return best


def _brute_connectivity(g):
    if all(g.adj[v] | (1 << v) == g.full for v in range(g.n)):
        return g.n - 1
    for k in range(g.n):
        for cut in itertools.combinations(range(g.n), k):
            rest = g.full & ~sum(1 << v for v in cut)
            if rest and not is_connected(induced_subgraph(g, rest)):
                return k
    return g.n - 1


def test_examples():
    assert matching_number(cycle(5)) == 2
    assert matching_number(named_graph("R13")) == 6
    m = maximum_matching(complete(4))
    assert m.size == 2 and m.exposed == 0
    assert edge_cover_number(named_graph("R13")) == 7
    assert edge_cover_number(complete(2)) == 1
    assert edge_cover_number(disjoint_union(cycle(5), empty_graph(1))) is None


def test_matching_is_valid_and_maximum(random_graphs):
    for g in random_graphs[:3000]:
        m = maximum_matching(g)
        used = [v for e in m.edges for v in e]
        assert len(set(used)) == len(used) == 2 * m.size
        assert all(g.has_edge(u, v) for u, v in m.edges)
        assert m.exposed == g.full & ~sum(1 << v for v in used)
    for g in [g for g in random_graphs if g.n <= 8][:500]:
        assert matching_number(g) == _brute_nu(g)


def test_gallai_identity(random_graphs):
    for g in random_graphs:
        if g.n >= 2 and is_connected(g):
            assert matching_number(g) + edge_cover_number(g) == g.n


def test_factor_critical():
    assert is_factor_critical(cycle(5)) == (True, None)
    assert is_factor_critical(named_graph("R13"))[0]
    assert is_factor_critical(empty_graph(1))[0]
    assert not is_factor_critical(cycle(6))[0]
    ok, v = is_factor_critical(from_edges(3, [(0, 1), (1, 2)]))
    assert not ok and not has_perfect_matching(from_edges(3, [(0, 1), (1, 2)]), 0b111 & ~(1 << v))


def test_gallai_theorem(random_graphs):
    # connected and no vertex is missed by every maximum matching -> factor-critical
    for g in random_graphs[:3000]:
        if not is_connected(g):
            continue
        nu = matching_number(g)
        if all(matching_number(g, g.full & ~(1 << v)) == nu for v in range(g.n)):
            assert is_factor_critical(g)[0] and g.n % 2 == 1


def test_bicritical():
    assert is_bicritical(complete(4)) == (True, None)
    ok, (u, v) = is_bicritical(cycle(6))
    assert not ok and min((v - u) % 6, (u - v) % 6) == 2


def test_connectivity(random_graphs):
    assert vertex_connectivity(cycle(5)) == 2
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(named_graph("R13")) >= 14 - 9 - 3
    for g in [g for g in random_graphs if g.n <= 8][:400]:
        assert vertex_connectivity(g) == _brute_connectivity(g)


def test_simplicial():
    assert simplicial_vertices(from_edges(3, [(0, 1), (1, 2)])) == 0b101
    assert simplicial_vertices(cycle(5)) == 0
    for nm in ("C5", "2C5", "R13", "C7"):
        assert simplicial_vertices(named_graph(nm)) == 0


def test_r13_matching_structure():
    r13 = named_graph("R13")
    for v in range(13):
        assert has_perfect_matching(r13, r13.full & ~(1 << v))
    # every 12-vertex induced subgraph is some R13 - v
    assert all(has_perfect_matching(induced_subgraph(r13, r13.full & ~(1 << v))) for v in range(13))
