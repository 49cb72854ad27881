import json
import subprocess
import sys

import pytest

from gaplab.cli import BUDGET, DATA, FAIL, OK, USAGE, dispatch
from gaplab.constructions import cycle
from gaplab.enumeration import canonical_form


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(out):
    return json.loads(out.strip().splitlines()[-1])


def test_gap_and_invariants(capsys):
    code, out, _ = run(capsys, "gap", "--construct", "R13")
    assert code == OK and payload(out) == {"n": 13, "alpha": 4, "theta": 7, "gap": 3}
    code, out, _ = run(capsys, "invariants", "--graph6", "Dhc")
    assert code == OK and payload(out)["alpha"] == 2


def test_critical_exit_codes(capsys):
    assert run(capsys, "critical", "--construct", "C5")[0] == OK
    code, out, _ = run(capsys, "critical", "--construct", "C6")
    assert code == FAIL and payload(out)["full_critical"] is False


def test_chain_helly_matching_connectivity(capsys):
    code, out, _ = run(capsys, "chain", "--construct", "R13")
    assert [s["gap"] for s in payload(out)["chain"]] == [3, 2, 1, 0]
    code, out, _ = run(capsys, "clique-helly", "--graph6", "Ezn?")
    assert payload(out) == {"clique_helly": False, "triangular_claw": None,
                            "pyramid": [0, 1, 2, 3, 4, 5]}
    code, out, _ = run(capsys, "matching", "--construct", "R13")
    assert payload(out)["factor_critical"] is True
    code, out, _ = run(capsys, "connectivity", "--construct", "R13")
    assert payload(out) == {"vertex_connectivity": 4}
    code, out, _ = run(capsys, "perfectness-gap", "--construct", "C5")
    assert payload(out) == {"perfectness_gap": 1}


def test_file_input(capsys, tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("Dhc\n# skip\nD~{\n")
    code, out, _ = run(capsys, "gap", "--file", str(p))
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == OK and [x["graph"] for x in lines] == [f"{p}:1", f"{p}:3"]


def test_formula_commands(capsys):
    assert payload(run(capsys, "formula", "gap2", "--n", "17")[1])["value"] == {"lo": 4, "hi": 4}
    assert payload(run(capsys, "formula", "gap-bounds", "--n", "35")[1])["value"] == {"lo": 10, "hi": 10}
    assert payload(run(capsys, "formula", "s-bounds", "--t", "5")[1])["value"] == {"lo": 20, "hi": 21}
    assert payload(run(capsys, "formula", "beta", "--n", "10", "--theta", "6")[1])["value"] == {"lo": 4, "hi": 5}
    code, out, err = run(capsys, "formula", "s2", "--t-max", "8")
    assert code == OK and "s2(7)" in err
    assert [x["value"]["lo"] for x in payload(out)["s2"]] == [5, 10, 13, 17, 21, 25, 27, 31]


def test_ramsey_commands(capsys, tmp_path):
    assert payload(run(capsys, "ramsey", "alpha", "--n", "40")[1])["value"] == {"lo": 9, "hi": 10}
    assert payload(run(capsys, "ramsey", "perfect", "--up-to", "39")[1])["perfect"] == [10]
    assert payload(run(capsys, "ramsey", "twins")[1])["twins"] == [[3, 6], [6, 9]]
    assert run(capsys, "ramsey", "validate")[0] == OK
    code, out, _ = run(capsys, "ramsey", "table")
    doc = payload(out)
    doc["r3"][6] = {"l": 7, "lo": 21, "hi": 21}
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "ramsey", "validate", "--table", str(p))
    assert code == FAIL and payload(out)["verdict"] == "FAIL"


def test_construct_and_ingest(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "C5", "--graph6")
    assert out.strip() == "Dhc"
    code, out, _ = run(capsys, "construct", "stable-gap-optimal", "--n", "10")
    assert payload(out)["n"] == 10
    from gaplab.constructions import bundled_catalog_path

    code, out, _ = run(capsys, "construct", "stable-gap-optimal", "--n", "17",
                       "--catalog", bundled_catalog_path(), "--l", "6")
    assert code == OK and payload(out)["n"] == 17
    assert run(capsys, "construct", "stable-gap-optimal", "--n", "17")[0] == DATA
    code, out, _ = run(capsys, "ingest", "ramsey-catalog", "--file", bundled_catalog_path(), "--l", "6")
    assert code == OK and payload(out)["accepted"] == 1
    p = tmp_path / "bad.g6"
    p.write_text("Dhc\n")
    code, _, err = run(capsys, "ingest", "ramsey-catalog", "--file", str(p), "--l", "4")
    assert code == DATA and "line 1" in err


def test_enumerate_and_census(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--count")
    assert payload(out) == {"n": 5, "count": 34}
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--triangle-free")
    assert len(out.split()) == 7
    code, out, _ = run(capsys, "census", "gap", "--n-max", "5", "--csv", "--witness-dir", str(tmp_path))
    assert out.splitlines()[-1] == "5,34,33,1"
    assert (tmp_path / "gap-n5-witnesses.g6").read_text().strip() == str(canonical_form(cycle(5)))
    code, out, _ = run(capsys, "census", "gap2", "--n-max", "6")
    assert [r["max_gap"] for r in payload(out)["rows"]] == [0, 0, 0, 0, 1, 1]


def test_verify_suites(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "ramsey-graphs", "--out", str(tmp_path))
    assert code == OK and payload(out)["verdict"] == "PASS"
    assert (tmp_path / "ramsey-3-4-graphs.json").exists()
    assert run(capsys, "verify", "--suite", "ramsey-table")[0] == OK
    assert run(capsys, "verify", "--suite", "s2-discrepancy")[0] == OK
    code, out, err = run(capsys, "verify", "--suite", "properties", "--samples", "300")
    results = {r["suite"]: r["verdict"] for r in payload(out)["suites"][0]["results"]}
    assert results["pyramid"] == "PASS" and results["duality"] == "PASS"
    assert code == (OK if results["triangular-claw"] == "PASS" else FAIL)


@pytest.mark.parametrize("argv,code", [
    (["gap"], USAGE),
    (["gap", "--graph6", "Dhc", "--construct", "C5"], USAGE),
    (["formula", "gap2"], USAGE),
    (["formula", "beta", "--n", "10", "--theta", "3"], USAGE),
    (["ramsey", "perfect"], USAGE),
    (["nonsense"], USAGE),
    (["gap", "--graph6", "!!"], DATA),
    (["gap", "--construct", "Petersen"], DATA),
    (["gap", "--file", "/nonexistent.g6"], DATA),
    (["ramsey", "table", "--table", "/nonexistent.json"], DATA),
    (["critical", "--construct", "E17"], BUDGET),
    (["enumerate", "--n", "13", "--count"], BUDGET),
    (["census", "gap", "--n-max", "11"], BUDGET),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "gaplab.cli", "gap", "--construct", "C5"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["gap"] == 1
