"""Isomorph-free graph generation by canonical augmentation, census tables
and the brute-force oracles behind the small-case claims."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator

from gaplab import kernels
from gaplab.graph import Graph, decode_graph6, encode_graph6, read_graph6_lines
from gaplab.invariants import BudgetExceeded, clique_cover_number, stable_set_number

GRAPH_BUDGET = 11
GRAPH_BUDGET_OVERRIDE = 12
TRIANGLE_FREE_BUDGET = 13
GAP_TABLE_BUDGET = 10
GAP2_TABLE_BUDGET = 12
PACKED_LIMIT = 16
WITNESS_LIMIT = 64
STREAM_RUN = 4096


# -- canonical forms -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 of the canonical relabelling; equal iff the graphs are isomorphic."""

    bytes: bytes

    def graph(self) -> Graph:
        return decode_graph6(self.bytes.decode("ascii"))

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


def canonical_labelling(g: Graph) -> list[int]:
    """lab[k] is the vertex of g placed at canonical position k."""
    return kernels.canon(list(g.adj), g.n, [g.full] if g.n else [])[0]


def canonical_graph(g: Graph) -> Graph:
    rows = kernels.canon(list(g.adj), g.n, [g.full] if g.n else [])[1]
    return Graph(g.n, tuple(rows))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(encode_graph6(canonical_graph(g)).encode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)


# -- generation ------------------------------------------------------------------

def _unpack(blob: bytes, n: int) -> Iterator[list[int]]:
    step = 2 * n
    for off in range(0, len(blob), step):
        yield [int.from_bytes(blob[off + 2 * i: off + 2 * i + 2], "little") for i in range(n)]


def _chunks(blob: bytes, n: int, parts: int) -> list[bytes]:
    """Split a packed level into contiguous runs of whole parents."""
    if n == 0:
        return [blob]
    count = len(blob) // (2 * n)
    parts = max(1, min(parts, count))
    bounds = [count * i // parts for i in range(parts + 1)]
    return [blob[2 * n * bounds[i]: 2 * n * bounds[i + 1]] for i in range(parts)]


def _extend_job(args):
    blob, np_, mo, ma = args
    return kernels.extend_level(blob, np_, mo, ma)


def _stats_job(args):
    blob, np_, mo, ma, limit = args
    return kernels.extend_stats(blob, np_, mo, ma, limit)


def _map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with get_context("fork").Pool(workers) as pool:
        return pool.map(fn, jobs, chunksize=1)


def _job_split(workers: int) -> int:
    # several chunks per worker keeps the pool balanced
    return 1 if workers <= 1 else 8 * workers


@lru_cache(maxsize=32)
def _level(n: int, max_omega: int, max_alpha: int, workers: int = 1) -> bytes:
    """All classes on n vertices (subject to the hereditary caps), packed."""
    if n == 0:
        return b""
    parent = _level(n - 1, max_omega, max_alpha, workers)
    if n == 1:
        return kernels.extend_level(b"", 0, max_omega, max_alpha)
    parts = _chunks(parent, n - 1, _job_split(workers))
    out = _map(_extend_job, [(p, n - 1, max_omega, max_alpha) for p in parts], workers)
    return b"".join(out)


def _check_order(n: int, budget: int, allow_large: bool, limit_large: int, what: str) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = limit_large if allow_large else budget
    if n > cap:
        raise BudgetExceeded(f"{what} limited to {cap} vertices (got {n})")


def _stream(n: int, max_omega: int, max_alpha: int, jobs: int) -> Iterator[Graph]:
    """Emit level n without storing it: parents are cached, children are not."""
    if n == 0:
        yield Graph(0, ())
        return
    parent = _level(n - 1, max_omega, max_alpha, max(1, jobs)) if n > 1 else b""
    runs = _chunks(parent, n - 1, max(1, len(parent) // (2 * (n - 1) * STREAM_RUN))) if n > 1 else [b""]
    for run in runs:
        for rows in _unpack(kernels.extend_level(run, n - 1, max_omega, max_alpha), n):
            yield Graph(n, tuple(rows))


def enumerate_graphs(n: int, filter: Callable[[Graph], bool] | None = None, *,
                     max_omega: int = 0, max_alpha: int = 0, allow_large: bool = False,
                     jobs: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices.

    max_omega / max_alpha (0 = off) keep only graphs whose clique / stability
    number is below the cap, pruning inside the generator since both are
    hereditary.  filter is applied to every emitted graph.
    """
    _check_order(n, GRAPH_BUDGET, allow_large, GRAPH_BUDGET_OVERRIDE, "enumeration")
    for g in _stream(n, max_omega, max_alpha, jobs):
        if filter is None or filter(g):
            yield g


def enumerate_triangle_free(n: int, *, max_alpha: int = 0, jobs: int = 1) -> Iterator[Graph]:
    _check_order(n, TRIANGLE_FREE_BUDGET, False, TRIANGLE_FREE_BUDGET, "triangle-free enumeration")
    yield from _stream(n, 3, max_alpha, jobs)


def class_count(n: int, *, max_omega: int = 0, max_alpha: int = 0, jobs: int = 1) -> int:
    if n == 0:
        return 1
    if n > PACKED_LIMIT:
        raise BudgetExceeded("census limited to 16 vertices")
    return len(_level(n, max_omega, max_alpha, max(1, jobs))) // (2 * n)


# -- census ----------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    """Gap statistics of one census level.

    hist[theta][alpha] counts classes; witnesses are canonical graph6
    strings of graphs attaining max_gap (at most WITNESS_LIMIT, sorted),
    with witnesses_complete telling whether all of them are listed.
    """

    n: int
    count: int
    hist: tuple[tuple[int, ...], ...]
    max_gap: int
    witnesses: tuple[str, ...]
    witnesses_complete: bool
    triangle_free: bool = False

    @property
    def gap_counts(self) -> dict[int, int]:
        out: Counter[int] = Counter()
        for th, row in enumerate(self.hist):
            for a, c in enumerate(row):
                if c:
                    out[th - a] += c
        return dict(sorted(out.items()))

    def min_alpha(self, theta: int) -> int | None:
        """Least stability number among classes with clique-cover number theta."""
        if theta >= len(self.hist):
            return None
        return next((a for a, c in enumerate(self.hist[theta]) if c), None)

    def to_json(self) -> dict:
        return {"n": self.n, "count": self.count, "triangle_free": self.triangle_free,
                "max_gap": self.max_gap,
                "gap_counts": {str(k): v for k, v in self.gap_counts.items()},
                "hist": [list(r) for r in self.hist],
                "witnesses": list(self.witnesses), "witnesses_complete": self.witnesses_complete}


def _finish_row(n: int, total: int, hist, maxgap: int, raw: list[list[int]],
                triangle_free: bool) -> CensusRow:
    hist = tuple(tuple(r) for r in hist)
    at_max = sum(c for th, r in enumerate(hist) for a, c in enumerate(r) if th - a == maxgap)
    forms = sorted({str(canonical_form(Graph(n, tuple(w)))) for w in raw})
    return CensusRow(n, total, hist, maxgap, tuple(forms), len(raw) == at_max, triangle_free)


@lru_cache(maxsize=64)
def _census(n: int, max_omega: int, max_alpha: int, workers: int, limit: int) -> CensusRow:
    tf = max_omega == 3
    if n == 0:
        return CensusRow(0, 1, ((1,),), 0, (encode_graph6(Graph(0, ())),), True, tf)
    parent = _level(n - 1, max_omega, max_alpha, workers) if n > 1 else b""
    parts = _chunks(parent, n - 1, _job_split(workers)) if n > 1 else [b""]
    results = _map(_stats_job, [(p, n - 1, max_omega, max_alpha, limit) for p in parts], workers)
    hist = [[0] * (n + 1) for _ in range(n + 1)]
    total = 0
    maxgap = max(r[2] for r in results)
    raw: list[list[int]] = []
    for cnt, h, mg, wit in results:
        total += cnt
        for th in range(n + 1):
            for a in range(n + 1):
                hist[th][a] += h[th][a]
        if mg == maxgap:
            raw.extend(wit)
    return _finish_row(n, total, hist, maxgap, raw[:limit], tf)


def census(n: int, *, triangle_free: bool = False, max_omega: int = 0, max_alpha: int = 0,
           jobs: int = 1, witness_limit: int = WITNESS_LIMIT) -> CensusRow:
    """Exhaustive gap census over all classes on n vertices.

    Results do not depend on jobs: parents are split into contiguous runs and
    merged in run order.
    """
    if n > PACKED_LIMIT:
        raise BudgetExceeded("census limited to 16 vertices")
    mo = 3 if triangle_free else max_omega
    return _census(n, mo, max_alpha, max(1, jobs), witness_limit)


def brute_gap_table(n_max: int, *, jobs: int = 1, allow_large: bool = False) -> list[CensusRow]:
    _check_order(n_max, GAP_TABLE_BUDGET, allow_large, GRAPH_BUDGET_OVERRIDE, "gap table")
    return [census(n, jobs=jobs) for n in range(1, n_max + 1)]


def brute_gap2_table(n_max: int, *, jobs: int = 1) -> list[CensusRow]:
    _check_order(n_max, GAP2_TABLE_BUDGET, True, TRIANGLE_FREE_BUDGET, "triangle-free gap table")
    return [census(n, triangle_free=True, jobs=jobs) for n in range(1, n_max + 1)]


def census_from_graph6(lines: Iterable[str], n: int, expected_count: int | None = None,
                       spot_checks: int = 2000) -> CensusRow:
    """Gap census over an external graph6 stream.

    The stream is cross-validated: every graph has order n, the total
    matches expected_count when given, and an evenly spaced sample of
    spot_checks graphs has pairwise distinct canonical forms.
    """
    graphs = [g for _, g in read_graph6_lines(lines)]
    if any(g.n != n for g in graphs):
        raise ValueError(f"stream contains a graph whose order is not {n}")
    if expected_count is not None and len(graphs) != expected_count:
        raise ValueError(f"stream has {len(graphs)} graphs, expected {expected_count}")
    step = max(1, len(graphs) // max(1, spot_checks))
    sample = [canonical_form(g) for g in graphs[::step]]
    if len(set(sample)) != len(sample):
        raise ValueError("stream contains isomorphic duplicates")
    hist = [[0] * (n + 1) for _ in range(n + 1)]
    maxgap = -n - 1
    raw: list[list[int]] = []
    for g in graphs:
        a = stable_set_number(g)[0]
        th = clique_cover_number(g)[0]
        hist[th][a] += 1
        if th - a > maxgap:
            maxgap, raw = th - a, []
        if th - a == maxgap and len(raw) < WITNESS_LIMIT:
            raw.append(list(g.adj))
    return _finish_row(n, len(graphs), hist, maxgap, raw, False)


def write_census_csv(rows: list[CensusRow]) -> str:
    top = max((max(r.gap_counts) for r in rows if r.gap_counts), default=0)
    head = "n,count," + ",".join(f"gap{k}" for k in range(top + 1))
    body = []
    for r in rows:
        counts = r.gap_counts
        body.append(",".join(str(x) for x in [r.n, r.count] + [counts.get(k, 0) for k in range(top + 1)]))
    return "\n".join([head] + body) + "\n"


# -- independent oracles -------------------------------------------------------------

LABELED_BUDGET = 7


@dataclass(frozen=True)
class LabeledRow:
    n: int
    labeled_count: int
    max_gap: int
    gap_counts: dict[int, int]
    witnesses: tuple[str, ...]


def labeled_gap_row(n: int) -> LabeledRow:
    """Gap statistics over all 2^(n choose 2) labelled graphs; witnesses
    are reported up to isomorphism."""
    if n > LABELED_BUDGET:
        raise BudgetExceeded(f"labelled sweep limited to {LABELED_BUDGET} vertices")
    hist, maxgap, raw = kernels.labeled_stats(n, 1 << 21)
    counts: Counter[int] = Counter()
    for th, row in enumerate(hist):
        for a, c in enumerate(row):
            if c:
                counts[th - a] += c
    forms = sorted({str(canonical_form(Graph(n, tuple(w)))) for w in raw})
    return LabeledRow(n, sum(counts.values()), maxgap, dict(sorted(counts.items())), tuple(forms))


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def burnside_class_count(n: int) -> int:
    """Number of unlabelled graphs on n vertices by orbit counting.

    A permutation with cycle lengths c_i fixes 2^e labelled graphs, where e
    counts the cycles it induces on vertex pairs.
    """
    total = 0
    for parts in _partitions(n):
        e = sum(c // 2 for c in parts)
        e += sum(math.gcd(a, b) for a, b in combinations(parts, 2))
        mult = Counter(parts)
        perms = math.factorial(n)
        for c, m in mult.items():
            perms //= c ** m * math.factorial(m)
        total += perms * (1 << e)
    return total // math.factorial(n)


QUOTIENT_BUDGET = 5


def brute_quotient_count(n: int) -> int:
    """Isomorphism classes of labelled graphs, by minimising over all n! relabellings."""
    if n > QUOTIENT_BUDGET:
        raise BudgetExceeded(f"brute-force quotient limited to {QUOTIENT_BUDGET} vertices")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    images = [[index[tuple(sorted((p[i], p[j])))] for i, j in pairs] for p in perms]
    seen = set()
    for mask in range(1 << len(pairs)):
        bits = [k for k in range(len(pairs)) if mask >> k & 1]
        seen.add(min(sum(1 << img[k] for k in bits) for img in images))
    return len(seen)


# -- claims ----------------------------------------------------------------------

class UnknownClaim(KeyError):
    pass


@dataclass
class Certificate:
    """Outcome of a verification claim; data holds everything needed to re-check it."""

    claim: str
    passed: bool
    summary: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim": self.claim, "verdict": "PASS" if self.passed else "FAIL",
                "summary": self.summary, "data": self.data}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _row_json(row: CensusRow) -> dict:
    return {"n": row.n, "count": row.count, "max_gap": row.max_gap,
            "gap_counts": {str(k): v for k, v in row.gap_counts.items()},
            "witnesses": list(row.witnesses)}


def _named_form(name: str) -> str:
    from gaplab.constructions import named_graph

    return str(canonical_form(named_graph(name)))


def _claim_unique_extremal(target: int, order: int, name: str, jobs: int) -> Certificate:
    rows = [census(n, jobs=jobs) for n in range(1, order + 1)]
    below_ok = all(r.max_gap < target for r in rows[:-1])
    last = rows[-1]
    count = last.gap_counts.get(target, 0)
    want = _named_form(name)
    ok = below_ok and last.max_gap == target and count == 1 and last.witnesses == (want,)
    summary = (f"max gap below {target} on fewer than {order} vertices; exactly {count} class with "
               f"gap {target} at n={order}, {'isomorphic' if last.witnesses == (want,) else 'not isomorphic'} to {name}")
    return Certificate(f"unique-{target}-extremal", ok, summary,
                       {"rows": [_row_json(r) for r in rows], "expected": want})


def _claim_r13_extremal(jobs: int) -> Certificate:
    from gaplab.constructions import named_graph
    from gaplab.gap import gap, is_gap_critical

    r13 = named_graph("R13")
    g13 = gap(r13)
    crit = is_gap_critical(r13).full_critical
    full = [census(n, jobs=jobs) for n in range(1, 11)]
    tf = [census(n, triangle_free=True, jobs=jobs) for n in (11, 12)]
    gap9 = full[8].max_gap
    # a graph on 11 or 12 vertices with gap 3 and a triangle T leaves gap >= 2
    # on at most 9 vertices after deleting T; triangle-free ones are censused
    ok = (g13 == 3 and crit and all(r.max_gap < 3 for r in full) and gap9 <= 1
          and all(r.max_gap < 3 for r in tf))
    summary = (f"gap(R13)={g13}, fully gap-critical={crit}; full census max gap "
               f"{[r.max_gap for r in full]} for n=1..10; triangle-free max gap "
               f"{[r.max_gap for r in tf]} for n=11,12; deleting a triangle from a gap-3 graph on "
               f"11 or 12 vertices would leave gap >= 2 on <= 9 vertices, where the census maximum is {gap9}")
    return Certificate("r13-3-extremal", ok, summary, {
        "r13": str(r13), "gap": g13, "full_critical": crit,
        "full_rows": [_row_json(r) for r in full], "triangle_free_rows": [_row_json(r) for r in tf]})


def _claim_ramsey_graphs(l: int, names: list[str], jobs: int) -> Certificate:
    """The (3, l)-Ramsey graphs: every triangle-free graph of order R(3,l)-1
    with stability number below l, and none one vertex larger."""
    from gaplab.ramsey import default_table

    order = default_table().r(l).value - 1
    found = sorted(str(canonical_form(g)) for g in _stream(order, 3, l, jobs))
    above = class_count(order + 1, max_omega=3, max_alpha=l, jobs=jobs)
    want = sorted(_named_form(nm) for nm in names)
    ok = found == want and above == 0
    summary = (f"{len(found)} triangle-free graph(s) on {order} vertices with stability number "
               f"< {l} ({', '.join(names)} expected), {above} on {order + 1} vertices")
    return Certificate(f"ramsey-3-{l}-graphs", ok, summary,
                       {"order": order, "graphs": found, "expected": want, "count_above": above})


def _claim_threecases(jobs: int) -> Certificate:
    from gaplab.gap import two_disjoint_triangles

    checked = 0
    bad = None
    for g in _stream(10, 4, 4, jobs):
        checked += 1
        if two_disjoint_triangles(g) is None:
            bad = str(g)
            break
    ok = bad is None and checked > 0
    summary = (f"all {checked} graphs on 10 vertices with clique and stability number at most 3 "
               f"contain two disjoint triangles" if ok else f"counterexample {bad}")
    return Certificate("three-cases", ok, summary, {"checked": checked, "counterexample": bad})


def _claim_s4(jobs: int) -> Certificate:
    from gaplab.constructions import bundled_catalog_path, ingest_ramsey_catalog
    from gaplab.formulas import gap2_value, s2_sequence, s_bounds
    from gaplab.gap import gap
    from gaplab.invariants import is_triangle_free
    from gaplab.ramsey import default_table

    t = default_table()
    g = ingest_ramsey_catalog(bundled_catalog_path(), 6, t).get(6)
    g_gap = gap(g)
    tf = is_triangle_free(g)
    a = stable_set_number(g)[0]
    s2_4 = s2_sequence(4, t)[3].value
    sb = s_bounds(4, t).value
    g16, g17 = gap2_value(16, t).value, gap2_value(17, t).value
    ok = (tf and a == 5 and g.n == 17 and g_gap == 4 and s2_4.is_exact and s2_4.value == 17
          and g16.hi == 3 and g17.lo == 4 and sb.is_exact and sb.value == 17)
    summary = (f"(3,6)-Ramsey graph on {g.n} vertices has gap {g_gap}; s2(4)={s2_4}; "
               f"gap2(16)={g16}, gap2(17)={g17}; s(4) interval {sb}")
    return Certificate("s4-consistency", ok, summary, {
        "ramsey36": str(g), "gap": g_gap, "s2_4": s2_4.to_json(), "s4": sb.to_json()})


def _claim_r13_unique(jobs: int) -> Certificate:
    found = sorted(str(canonical_form(g)) for g in _stream(13, 3, 5, jobs))
    want = _named_form("R13")
    ok = found == [want]
    return Certificate("r13-unique-35-ramsey", ok,
                       f"{len(found)} triangle-free graph(s) on 13 vertices with stability number 4",
                       {"graphs": found, "expected": want})


CLAIMS: dict[str, Callable[[int], Certificate]] = {
    "unique-1-extremal": lambda jobs: _claim_unique_extremal(1, 5, "C5", jobs),
    "unique-2-extremal": lambda jobs: _claim_unique_extremal(2, 10, "2C5", jobs),
    "r13-3-extremal": _claim_r13_extremal,
    "s4-consistency": _claim_s4,
    "three-cases": _claim_threecases,
    "ramsey-3-3-graphs": lambda jobs: _claim_ramsey_graphs(3, ["C5"], jobs),
    "ramsey-3-4-graphs": lambda jobs: _claim_ramsey_graphs(4, ["W8", "W81", "W82"], jobs),
    "r13-unique-35-ramsey": _claim_r13_unique,
}


def verify_claim(claim_id: str, jobs: int = 1) -> Certificate:
    try:
        fn = CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None
    return fn(jobs)


def recheck_certificate(doc: dict) -> bool:
    """Re-derive the witness-level facts recorded in a serialized certificate."""
    data = doc["data"]
    claim = doc["claim"]
    if claim.startswith("unique-"):
        last = data["rows"][-1]
        return last["witnesses"] == [data["expected"]] and all(
            str(canonical_form(decode_graph6(w))) == w for w in last["witnesses"])
    if claim.startswith("ramsey-3-") or claim == "r13-unique-35-ramsey":
        return sorted(str(canonical_form(decode_graph6(w))) for w in data["graphs"]) == \
            sorted(data["expected"] if isinstance(data["expected"], list) else [data["expected"]])
    if claim == "r13-3-extremal":
        from gaplab.gap import gap

        return gap(decode_graph6(data["r13"])) == data["gap"] == 3
    if claim == "s4-consistency":
        from gaplab.gap import gap

        return gap(decode_graph6(data["ramsey36"])) == data["gap"] == 4
    if claim == "three-cases":
        return data["counterexample"] is None
    return False
