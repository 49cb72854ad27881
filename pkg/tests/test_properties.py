import random

import pytest

from gaplab.gap import clique_helly_analysis, is_gap_critical, triangular_claw
from gaplab.graph import decode_graph6
from gaplab.properties import SUITES, critical_core, random_graph, run_suite

SAMPLES = 10_000
HOLDING = [name for name in SUITES if name != "triangular-claw"]


@pytest.mark.parametrize("name", HOLDING)
def test_suite_has_no_violations(name):
    res = run_suite(name, SAMPLES, seed=0)
    assert res.checked == SAMPLES
    assert res.applicable > 0
    assert res.passed, res.violations[:3]


def test_literal_triangular_claw_suite_reports_counterexamples():
    # the stable-outer-vertex form of the Helly lemma is false; the suite
    # must surface that rather than hide it
    res = run_suite("triangular-claw", SAMPLES, seed=0)
    assert not res.passed
    g = decode_graph6(res.violations[0].split(":")[0])
    assert triangular_claw(g) is None and not clique_helly_analysis(g)[0]


def test_suites_are_seeded():
    a = run_suite("greedy-bound", 200, seed=7).to_json()
    b = run_suite("greedy-bound", 200, seed=7).to_json()
    assert a == b


def test_random_graph_range():
    rng = random.Random(1)
    orders = {random_graph(rng).n for _ in range(2000)}
    assert orders == set(range(1, 13))


def test_critical_core_is_gap_critical():
    rng = random.Random(3)
    hits = 0
    for _ in range(1500):
        core = critical_core(random_graph(rng, n_max=10))
        if core is not None:
            hits += 1
            assert is_gap_critical(core).full_critical
    assert hits >= 10
