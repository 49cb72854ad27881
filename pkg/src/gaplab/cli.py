"""Command-line interface.

Exit codes: 0 ok/pass, 1 fail or counterexample, 2 usage, 3 budget or
resource limit, 4 data error.  Payloads go to stdout as JSON (or CSV with
--csv); human-readable notes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator

from gaplab import kernels
from gaplab.constructions import (
    NAMES,
    CatalogError,
    ConstructionError,
    UnknownGraphName,
    builtin_catalog,
    ingest_ramsey_catalog,
    named_graph,
    stable_gap_optimal,
)
from gaplab.enumeration import (
    brute_gap2_table,
    brute_gap_table,
    enumerate_graphs,
    verify_claim,
    write_census_csv,
)
from gaplab.formulas import (
    biro_beta,
    check_alpha_increment,
    gap2_value,
    gap_bounds,
    s2_discrepancy_notices,
    s2_sequence,
    s_bounds,
)
from gaplab.gap import (
    clique_helly_analysis,
    gap_chain,
    is_gap_critical,
    perfectness_gap,
    pyramid,
)
from gaplab.graph import CapacityError, Graph, Graph6Error, GraphError, decode_graph6, members, read_graph6_lines
from gaplab.invariants import BudgetExceeded, clique_cover_number, invariant_report, stable_set_number
from gaplab.matching import (
    edge_cover_number,
    is_bicritical,
    is_factor_critical,
    maximum_matching,
    vertex_connectivity,
)
from gaplab.properties import SUITES, run_suite
from gaplab.ramsey import (
    InconsistencyError,
    RamseyTable,
    alpha_of,
    default_table,
    epsilon_of,
    find_twins,
    is_ramsey_perfect,
    load_table,
    perfect_numbers,
    validate_table,
)

OK, FAIL, USAGE, BUDGET, DATA = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text + "\n")


def _table(args) -> RamseyTable:
    if not getattr(args, "table", None):
        return default_table()
    try:
        return load_table(args.table)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise DataError(f"cannot load table {args.table}: {exc}") from exc


def _graphs(args) -> Iterator[tuple[str, Graph]]:
    given = [x for x in (args.graph6, args.file, args.construct) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --file, --construct")
    if args.graph6 is not None:
        yield args.graph6, decode_graph6(args.graph6)
    elif args.construct is not None:
        yield args.construct, named_graph(args.construct)
    else:
        with open(args.file, encoding="ascii", errors="replace") as fh:
            for no, g in read_graph6_lines(fh):
                yield f"{args.file}:{no}", g


# -- graph commands -----------------------------------------------------------------

def _cmd_invariants(g: Graph, args):
    return invariant_report(g).to_json(), OK


def _cmd_gap(g: Graph, args):
    a = stable_set_number(g)[0]
    th = clique_cover_number(g)[0]
    return {"n": g.n, "alpha": a, "theta": th, "gap": th - a}, OK


def _cmd_critical(g: Graph, args):
    v = is_gap_critical(g, args.budget)
    return v.to_json(), OK if v.full_critical else FAIL


def _cmd_chain(g: Graph, args):
    chain = gap_chain(g, args.budget)
    return {"chain": [{"vertices": members(s), "gap": k} for s, k in chain]}, OK


def _cmd_perfectness(g: Graph, args):
    return {"perfectness_gap": perfectness_gap(g, args.budget)}, OK


def _cmd_helly(g: Graph, args):
    helly, claw = clique_helly_analysis(g)
    pyr = pyramid(g)
    return {"clique_helly": helly, "triangular_claw": None if claw is None else members(claw),
            "pyramid": None if pyr is None else members(pyr)}, OK


def _cmd_matching(g: Graph, args):
    m = maximum_matching(g)
    fc, fv = is_factor_critical(g)
    bc, pair = is_bicritical(g)
    z = edge_cover_number(g)
    out = m.to_json()
    out.update({"edge_cover": "undefined" if z is None else z,
                "factor_critical": fc, "factor_critical_witness": fv,
                "bicritical": bc, "bicritical_witness": None if pair is None else list(pair)})
    return out, OK


def _cmd_connectivity(g: Graph, args):
    return {"vertex_connectivity": vertex_connectivity(g)}, OK


GRAPH_COMMANDS = {
    "invariants": _cmd_invariants,
    "gap": _cmd_gap,
    "critical": _cmd_critical,
    "chain": _cmd_chain,
    "perfectness-gap": _cmd_perfectness,
    "clique-helly": _cmd_helly,
    "matching": _cmd_matching,
    "connectivity": _cmd_connectivity,
}


def _run_graph_command(args) -> int:
    worst = OK
    for label, g in _graphs(args):
        payload, code = GRAPH_COMMANDS[args.command](g, args)
        payload = {"graph": label, **payload} if args.file else payload
        _emit(payload)
        worst = max(worst, code)
    return worst


# -- formula and ramsey -------------------------------------------------------------

def _cmd_formula(args) -> int:
    t = _table(args)
    if args.which == "gap2":
        _emit({"n": args.n, **gap2_value(args.n, t).to_json()})
    elif args.which == "gap-bounds":
        _emit({"n": args.n, **gap_bounds(args.n, t).to_json()})
    elif args.which == "s-bounds":
        _emit({"t": args.t, **s_bounds(args.t, t).to_json()})
    elif args.which == "beta":
        if args.theta is None:
            raise UsageError("beta needs --theta")
        try:
            fv = biro_beta(args.n, args.theta, t)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit({"n": args.n, "theta": args.theta, **fv.to_json()})
    else:
        seq = s2_sequence(args.t_max, t)
        notices = s2_discrepancy_notices(seq)
        for line in notices:
            _note("notice: " + line)
        _emit({"s2": [{"t": i, **fv.to_json()} for i, fv in enumerate(seq, 1)], "notices": notices})
    return OK


def _cmd_ramsey(args) -> int:
    t = _table(args)
    if args.which == "table":
        _emit(t.to_json())
    elif args.which == "alpha":
        _emit({"n": args.n, "value": alpha_of(args.n, t).to_json()})
    elif args.which == "epsilon":
        _emit({"n": args.n, "value": epsilon_of(args.n, t).to_json()})
    elif args.which == "perfect":
        if args.up_to is not None:
            _emit({"up_to": args.up_to, "perfect": perfect_numbers(t, args.up_to)})
        else:
            v, cert = is_ramsey_perfect(args.n, t)
            _emit({"n": args.n, "verdict": v.verdict(),
                   "certificate": None if cert is None else cert.to_json()})
    elif args.which == "twins":
        _emit({"twins": [list(p) for p in find_twins(t, args.up_to)]})
    else:
        bad = validate_table(t)
        _emit({"violations": [{"rule": v.rule, "detail": v.detail} for v in bad],
               "verdict": "PASS" if not bad else "FAIL"})
        return FAIL if bad else OK
    return OK


# -- constructions, catalogs, enumeration -----------------------------------------

def _cmd_construct(args) -> int:
    if args.name == "stable-gap-optimal":
        if args.n is None:
            raise UsageError("stable-gap-optimal needs --n")
        t = _table(args)
        cat = builtin_catalog()
        if args.catalog:
            if args.l is None:
                raise UsageError("--catalog needs --l")
            ingest_ramsey_catalog(args.catalog, args.l, t, cat)
        g = stable_gap_optimal(args.n, t, cat)
    else:
        g = named_graph(args.name)
    if args.graph6:
        sys.stdout.write(str(g) + "\n")
    else:
        _emit({"name": args.name, "n": g.n, "edges": [list(e) for e in g.edges()], "graph6": str(g)})
    return OK


def _cmd_ingest(args) -> int:
    cat = ingest_ramsey_catalog(args.file, args.l, _table(args))
    graphs = cat.entries.get(args.l, [])
    _emit({"l": args.l, "accepted": len(graphs), "graphs": [str(g) for g in graphs]})
    return OK


def _cmd_enumerate(args) -> int:
    mo = 3 if args.triangle_free else args.max_omega
    stream = enumerate_graphs(args.n, max_omega=mo, max_alpha=args.max_alpha,
                              allow_large=args.allow_large, jobs=args.jobs)
    if args.count:
        _emit({"n": args.n, "count": sum(1 for _ in stream)})
    else:
        out = sys.stdout
        for g in stream:
            out.write(str(g) + "\n")
    return OK


def _cmd_census(args) -> int:
    if args.which == "gap":
        rows = brute_gap_table(args.n_max, jobs=args.jobs, allow_large=args.allow_large)
    else:
        rows = brute_gap2_table(args.n_max, jobs=args.jobs)
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for r in rows:
            path = os.path.join(args.witness_dir, f"{args.which}-n{r.n}-witnesses.g6")
            with open(path, "w", encoding="ascii") as fh:
                fh.writelines(w + "\n" for w in r.witnesses)
    if args.csv:
        sys.stdout.write(write_census_csv(rows))
    else:
        _emit({"census": args.which, "rows": [r.to_json() for r in rows]})
    return OK


# -- verification suites -----------------------------------------------------------

def _suite_ramsey_table(args) -> dict:
    t = _table(args)
    bad = validate_table(t)
    incr = check_alpha_increment(t)
    return {"suite": "ramsey-table", "passed": not bad and not incr,
            "violations": [{"rule": v.rule, "detail": v.detail} for v in bad],
            "alpha_increment_failures": incr,
            "twins": [list(p) for p in find_twins(t)], "perfect_up_to_39": perfect_numbers(t, 39)}


def _suite_s2(args) -> dict:
    t = _table(args)
    try:
        seq = s2_sequence(11, t)
    except InconsistencyError as exc:
        return {"suite": "s2-discrepancy", "passed": False, "error": str(exc)}
    notices = s2_discrepancy_notices(seq)
    for line in notices:
        _note("notice: " + line)
    return {"suite": "s2-discrepancy", "passed": True, "notices": notices,
            "s2": [str(fv.value) for fv in seq]}


def _claims_suite(name: str, ids: list[str]):
    def run(args) -> dict:
        certs = [verify_claim(c, args.jobs) for c in ids]
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            for c in certs:
                with open(os.path.join(args.out, f"{c.claim}.json"), "w", encoding="utf-8") as fh:
                    fh.write(c.dumps() + "\n")
        for c in certs:
            _note(f"{'PASS' if c.passed else 'FAIL'} {c.claim}: {c.summary}")
        return {"suite": name, "passed": all(c.passed for c in certs),
                "claims": [c.to_json() for c in certs]}
    return run


def _suite_properties(args) -> dict:
    results = [run_suite(s, args.samples, args.seed) for s in SUITES]
    for r in results:
        _note(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.applicable}/{r.checked} applicable, "
              f"{len(r.violations)} violations")
    return {"suite": "properties", "passed": all(r.passed for r in results),
            "results": [r.to_json() for r in results]}


VERIFY_SUITES = {
    "small-extremal": _claims_suite("small-extremal",
                                    ["unique-1-extremal", "unique-2-extremal", "r13-3-extremal"]),
    "ramsey-graphs": _claims_suite("ramsey-graphs",
                                   ["ramsey-3-3-graphs", "ramsey-3-4-graphs", "r13-unique-35-ramsey"]),
    "lemmas": _claims_suite("lemmas", ["three-cases", "s4-consistency"]),
    "ramsey-table": _suite_ramsey_table,
    "s2-discrepancy": _suite_s2,
    "properties": _suite_properties,
}


def _cmd_verify(args) -> int:
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    reports = [VERIFY_SUITES[n](args) for n in names]
    passed = all(r["passed"] for r in reports)
    _emit({"verdict": "PASS" if passed else "FAIL", "suites": reports})
    return OK if passed else FAIL


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", help="Ramsey table JSON overriding the built-in one")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph6", help="graph in graph6 format")
    graph_in.add_argument("--file", help="file with one graph6 per line")
    graph_in.add_argument("--construct", help=f"named graph: {', '.join(NAMES)}")
    graph_in.add_argument("--budget", type=int, default=16,
                          help="vertex limit for exhaustive subset methods")

    p = argparse.ArgumentParser(prog="gaplab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"gaplab (kernels: {kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)
    for name in GRAPH_COMMANDS:
        sub.add_parser(name, parents=[common, graph_in])

    f = sub.add_parser("formula", parents=[common])
    f.add_argument("which", choices=["gap2", "s2", "gap-bounds", "s-bounds", "beta"])
    f.add_argument("--n", type=int)
    f.add_argument("--t", type=int)
    f.add_argument("--theta", type=int)
    f.add_argument("--t-max", type=int, default=11)

    r = sub.add_parser("ramsey", parents=[common])
    r.add_argument("which", choices=["table", "alpha", "epsilon", "perfect", "twins", "validate"])
    r.add_argument("--n", type=int)
    r.add_argument("--up-to", type=int)

    c = sub.add_parser("construct", parents=[common])
    c.add_argument("name", help=f"one of {', '.join(NAMES)}, or stable-gap-optimal with --n")
    c.add_argument("--graph6", action="store_true", help="print only the graph6 string")
    c.add_argument("--n", type=int)
    c.add_argument("--catalog", help="extra (3, l)-Ramsey catalog for stable-gap-optimal")
    c.add_argument("--l", type=int, help="l of the graphs in --catalog")

    i = sub.add_parser("ingest", parents=[common])
    i.add_argument("kind", choices=["ramsey-catalog"])
    i.add_argument("--file", required=True)
    i.add_argument("--l", type=int, required=True, help="catalog holds (3, l)-Ramsey graphs")

    e = sub.add_parser("enumerate", parents=[common])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--triangle-free", action="store_true")
    e.add_argument("--max-omega", type=int, default=0, help="keep clique number below this")
    e.add_argument("--max-alpha", type=int, default=0, help="keep stability number below this")
    e.add_argument("--allow-large", action="store_true", help="raise the order budget to 12")
    e.add_argument("--count", action="store_true", help="print only the class count")

    s = sub.add_parser("census", parents=[common])
    s.add_argument("which", choices=["gap", "gap2"])
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--witness-dir", help="write witness graph6 sidecar files here")
    s.add_argument("--allow-large", action="store_true")

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--suite", default="all", choices=list(VERIFY_SUITES) + ["all"])
    v.add_argument("--out", help="directory for per-claim certificate files")
    v.add_argument("--samples", type=int, default=10_000, help="random graphs per property suite")
    return p


NEEDS = {("formula", "gap2"): "n", ("formula", "gap-bounds"): "n", ("formula", "beta"): "n",
         ("formula", "s-bounds"): "t", ("ramsey", "alpha"): "n", ("ramsey", "epsilon"): "n"}


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        key = (args.command, getattr(args, "which", None))
        if key in NEEDS and getattr(args, NEEDS[key]) is None:
            raise UsageError(f"{args.command} {args.which} needs --{NEEDS[key]}")
        if key == ("ramsey", "perfect") and args.n is None and args.up_to is None:
            raise UsageError("ramsey perfect needs --n or --up-to")
        if args.command in GRAPH_COMMANDS:
            return _run_graph_command(args)
        handler = {"formula": _cmd_formula, "ramsey": _cmd_ramsey, "construct": _cmd_construct,
                   "ingest": _cmd_ingest, "enumerate": _cmd_enumerate, "census": _cmd_census,
                   "verify": _cmd_verify}[args.command]
        return handler(args)
    except UsageError as exc:
        _note(f"usage error: {exc}")
        return USAGE
    except (BudgetExceeded, CapacityError) as exc:
        _note(f"budget exceeded: {exc}")
        return BUDGET
    except MemoryError:
        _note("out of memory")
        return BUDGET
    except (DataError, Graph6Error, GraphError, CatalogError, UnknownGraphName,
            ConstructionError, InconsistencyError, OSError) as exc:
        _note(f"data error: {exc}")
        return DATA


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
