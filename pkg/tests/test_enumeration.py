import json

import pytest

from gaplab.constructions import cycle, named_graph
from gaplab.enumeration import (
    CLAIMS,
    UnknownClaim,
    are_isomorphic,
    brute_gap2_table,
    brute_gap_table,
    brute_quotient_count,
    burnside_class_count,
    canonical_form,
    canonical_graph,
    census,
    census_from_graph6,
    class_count,
    enumerate_graphs,
    enumerate_triangle_free,
    labeled_gap_row,
    recheck_certificate,
    verify_claim,
    write_census_csv,
)
from gaplab.gap import gap, is_gap_critical
from gaplab.graph import complement, components, encode_graph6, induced_subgraph, relabel
from gaplab.invariants import BudgetExceeded, is_triangle_free
from gaplab.matching import is_factor_critical

GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
TRIANGLE_FREE_COUNTS = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]


def test_class_counts_match_known_sequence():
    assert [class_count(n) for n in range(0, 10)] == GRAPH_COUNTS
    assert [class_count(n, max_omega=3) for n in range(0, 11)] == TRIANGLE_FREE_COUNTS


@pytest.mark.parametrize("n", range(1, 9))
def test_class_counts_match_burnside(n):
    assert class_count(n) == burnside_class_count(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_counts_match_brute_quotient(n):
    assert class_count(n) == brute_quotient_count(n)


def test_enumeration_has_no_duplicates_and_canonical_forms_are_invariant(rng):
    for n in range(1, 8):
        graphs = list(enumerate_graphs(n))
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs) == class_count(n)
        for g in graphs[:: max(1, len(graphs) // 20)]:
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == canonical_form(g)
            assert are_isomorphic(canonical_graph(g), g)


def test_filters_match_post_filtering():
    for n in range(1, 9):
        a = sorted(canonical_form(g) for g in enumerate_triangle_free(n))
        b = sorted(canonical_form(g) for g in enumerate_graphs(n, is_triangle_free))
        assert a == b
        a = sorted(canonical_form(g) for g in enumerate_graphs(n, max_alpha=3))
        b = sorted(canonical_form(g) for g in enumerate_graphs(n, lambda g: is_triangle_free(complement(g))))
        assert a == b


def test_budgets():
    with pytest.raises(BudgetExceeded):
        next(enumerate_graphs(12))
    with pytest.raises(BudgetExceeded):
        next(enumerate_triangle_free(14))
    with pytest.raises(BudgetExceeded):
        census(17)
    with pytest.raises(BudgetExceeded):
        brute_gap_table(11)
    with pytest.raises(BudgetExceeded):
        labeled_gap_row(8)
    with pytest.raises(ValueError):
        next(enumerate_graphs(-1))


def test_census_small_rows():
    rows = brute_gap_table(9)
    assert [r.count for r in rows] == GRAPH_COUNTS[1:]
    assert [r.max_gap for r in rows] == [0, 0, 0, 0, 1, 1, 1, 1, 1]
    assert rows[4].witnesses == (str(canonical_form(cycle(5))),)
    assert sum(rows[8].gap_counts.values()) == rows[8].count


def test_census_matches_labeled_sweep():
    for n in range(1, 8):
        lab = labeled_gap_row(n)
        assert lab.labeled_count == 2 ** (n * (n - 1) // 2)
        row = census(n)
        assert lab.max_gap == row.max_gap
        assert set(lab.witnesses) == set(row.witnesses)
        assert set(lab.gap_counts) == set(row.gap_counts)


def test_census_deterministic_across_jobs():
    a = census(8, jobs=1)
    b = census(8, jobs=3)
    assert a == b
    assert census(9, triangle_free=True, jobs=2) == census(9, triangle_free=True, jobs=1)


def test_triangle_free_table():
    rows = brute_gap2_table(10)
    assert [r.count for r in rows] == TRIANGLE_FREE_COUNTS[1:]
    assert [r.max_gap for r in rows] == [0, 0, 0, 0, 1, 1, 1, 1, 1, 2]
    assert all(r.triangle_free for r in rows)


def test_census_csv_and_json():
    rows = brute_gap_table(5)
    text = write_census_csv(rows)
    assert text.splitlines()[0] == "n,count,gap0,gap1"
    assert text.splitlines()[-1] == "5,34,33,1"
    json.dumps(rows[-1].to_json())


def test_census_from_graph6_stream():
    lines = [encode_graph6(g) for g in enumerate_graphs(6)]
    row = census_from_graph6(lines, 6, expected_count=156)
    assert row.count == 156 and row.max_gap == census(6).max_gap
    assert row.gap_counts == census(6).gap_counts
    with pytest.raises(ValueError):
        census_from_graph6(lines, 6, expected_count=155)
    with pytest.raises(ValueError):
        census_from_graph6(lines + [lines[0]], 6)
    with pytest.raises(ValueError):
        census_from_graph6(lines, 7)


def test_min_alpha_from_census():
    row = census(5)
    assert row.min_alpha(5) == 5
    assert row.min_alpha(3) == 2


def test_triangle_free_critical_graphs_have_factor_critical_components():
    seen = 0
    for n in range(5, 10):
        for g in enumerate_triangle_free(n):
            if gap(g) > 0 and is_gap_critical(g).full_critical:
                seen += 1
                for c in components(g):
                    assert is_factor_critical(induced_subgraph(g, c))[0]
    assert seen >= 2


@pytest.mark.parametrize("claim", ["unique-1-extremal", "ramsey-3-3-graphs", "ramsey-3-4-graphs",
                                   "r13-3-extremal", "s4-consistency"])
def test_claims_pass_and_recheck(claim):
    cert = verify_claim(claim)
    assert cert.passed, cert.summary
    assert recheck_certificate(json.loads(cert.dumps()))


def test_claim_registry():
    assert set(CLAIMS) >= {"unique-1-extremal", "unique-2-extremal", "three-cases",
                           "r13-unique-35-ramsey"}
    with pytest.raises(UnknownClaim):
        verify_claim("no-such-claim")


def test_tampered_certificate_fails_recheck():
    doc = json.loads(verify_claim("r13-3-extremal").dumps())
    doc["data"]["r13"] = str(named_graph("C5"))
    assert not recheck_certificate(doc)
