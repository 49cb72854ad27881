import itertools

import pytest

from gaplab.constructions import complete, cycle, named_graph
from gaplab.enumeration import enumerate_graphs, enumerate_triangle_free
from gaplab.gap import (
    chromatic_gap,
    clique_helly_analysis,
    gap,
    gap_chain,
    is_gap_critical,
    perfectness_gap,
    pyramid,
    subset_gap_profile,
    triangular_claw,
    two_disjoint_triangles,
)
from gaplab.graph import complement, components, decode_graph6, empty_graph, induced_subgraph, members
from gaplab.invariants import BudgetExceeded, chromatic_number, clique_number
from gaplab.matching import is_factor_critical
from gaplab.properties import run_suite


def _maximal_cliques(g):
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        for v in members(p):
            bk(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.full, 0)
    return out


def _brute_helly(g):
    cs = _maximal_cliques(g)
    for k in range(3, len(cs) + 1):
        for fam in itertools.combinations(cs, k):
            if all(a & b for a, b in itertools.combinations(fam, 2)):
                common = g.full
                for c in fam:
                    common &= c
                if not common:
                    return False
    return True


def test_profile_examples():
    assert subset_gap_profile(cycle(5)).max_proper_gap() == 0
    c33 = named_graph("C33")
    p = subset_gap_profile(c33)
    assert p.gap_of(c33.full) == 1
    assert all(p.gap_of(c33.full & ~(1 << v)) == 0 for v in range(10))
    assert any(p.gap_of(s) == 1 for s in range(c33.full) if s.bit_count() == 5)
    assert subset_gap_profile(named_graph("2C5")).max_proper_gap() == 1
    with pytest.raises(BudgetExceeded):
        subset_gap_profile(empty_graph(17))


def test_profile_matches_direct_solvers(random_graphs):
    from gaplab.invariants import clique_cover_number, stable_set_number

    for g in [g for g in random_graphs if g.n <= 9][:60]:
        p = subset_gap_profile(g)
        for s in range(g.full + 1):
            h = induced_subgraph(g, s)
            assert p.alpha_of[s] == stable_set_number(h)[0]
            assert p.theta_of[s] == clique_cover_number(h)[0]


def test_criticality_examples():
    assert is_gap_critical(cycle(5)).full_critical
    v = is_gap_critical(complement(named_graph("ReplicatedC5")))
    assert v.weak_critical and not v.full_critical and v.witness == 0b11111
    v = is_gap_critical(cycle(6))
    assert not v.full_critical and not v.weak_critical
    assert is_gap_critical(named_graph("R13")).full_critical
    assert is_gap_critical(named_graph("2C5")).full_critical


def test_chain_examples():
    chain = gap_chain(named_graph("R13"))
    assert [k for _, k in chain] == [3, 2, 1, 0]
    assert all(b & ~a == 0 and b != a for (a, _), (b, _) in zip(chain, chain[1:]))
    assert len(gap_chain(cycle(6))) == 1
    assert [k for _, k in gap_chain(named_graph("2C5"))] == [2, 1, 0]


def test_perfectness_gap():
    assert perfectness_gap(cycle(6)) == 0
    assert perfectness_gap(cycle(5)) == 1
    assert perfectness_gap(complement(named_graph("R13"))) == 3
    assert chromatic_gap(named_graph("R13")) == 2


def test_clique_helly_examples():
    helly, claw = clique_helly_analysis(named_graph("T6"))
    assert not helly and claw == named_graph("T6").full
    assert clique_helly_analysis(cycle(5)) == (True, None)


def test_clique_helly_matches_brute_force(random_graphs):
    for g in [g for g in random_graphs if g.n <= 9][:1500]:
        assert clique_helly_analysis(g)[0] == _brute_helly(g)


def test_triangular_claw_lemma_as_stated_has_a_counterexample():
    g = decode_graph6("Ezn?")
    assert triangular_claw(g) is None
    assert not clique_helly_analysis(g)[0] and not _brute_helly(g)
    assert pyramid(g) == g.full


def test_pyramid_free_graphs_are_clique_helly():
    res = run_suite("pyramid", 10_000, 0)
    assert res.passed and res.applicable > 5000


def test_pyramid_free_census_graphs_are_clique_helly():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            if pyramid(g) is None:
                assert clique_helly_analysis(g)[0]


def test_two_disjoint_triangles():
    assert two_disjoint_triangles(complete(6)) is not None
    assert two_disjoint_triangles(named_graph("R13")) is None
    s, t = two_disjoint_triangles(complete(6))
    assert not s & t and s.bit_count() == t.bit_count() == 3


def test_remove_clique_and_component_suites():
    for name in ("remove-clique", "components", "alpha-two", "critical-cores"):
        res = run_suite(name, 10_000, 0)
        assert res.passed, res.violations[:5]
        assert res.applicable > 0


def test_triangle_free_critical_components_are_factor_critical():
    found = 0
    for n in range(1, 10):
        for g in enumerate_triangle_free(n):
            if gap(g) == 0 or not is_gap_critical(g).full_critical:
                continue
            found += 1
            for c in components(g):
                h = induced_subgraph(g, c)
                assert h.n % 2 == 1 and h.n >= 5 and is_factor_critical(h)[0]
    assert found > 0


def test_mycielskian_properties(random_graphs):
    from gaplab.constructions import mycielskian
    from gaplab.enumeration import are_isomorphic
    from gaplab.invariants import is_triangle_free

    assert are_isomorphic(mycielskian(complete(2)), cycle(5))
    for g in [g for g in random_graphs if g.n <= 7 and g.edge_count][:300]:
        m = mycielskian(g)
        assert chromatic_number(m)[0] == chromatic_number(g)[0] + 1
        assert is_triangle_free(m) == is_triangle_free(g)
        assert clique_number(m)[0] == max(2, clique_number(g)[0])
