"""Named graphs, the Mycielski operator, triangle-free extremal builders and
validated Ramsey-graph catalogs."""

from __future__ import annotations

import re
from importlib import resources
from dataclasses import dataclass, field

from gaplab.graph import (
    CapacityError,
    Graph,
    Graph6Error,
    decode_graph6,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    read_graph6_lines,
    replicate_vertex,
    union_of,
)
from gaplab.invariants import clique_number, is_triangle_free, stable_set_number
from gaplab.ramsey import NO, YES, RamseyTable, alpha_of, is_ramsey_number, is_ramsey_perfect


class UnknownGraphName(KeyError):
    pass


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def circulant(n: int, distances: list[int]) -> Graph:
    return from_edges(n, {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in distances})


def mycielskian(g: Graph) -> Graph:
    """Shadow vertex n+i copies the neighbourhood of i; apex 2n sees all shadows."""
    n = g.n
    if 2 * n + 1 > 64:
        raise CapacityError("Mycielskian would exceed 64 vertices")
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges += [(n + i, 2 * n) for i in range(n)]
    return from_edges(2 * n + 1, edges)


def _w8(drop: list[tuple[int, int]]) -> Graph:
    edges = {(i, (i + 1) % 8) for i in range(8)} | {(i, i + 4) for i in range(4)}
    edges = {tuple(sorted(e)) for e in edges} - {tuple(sorted(e)) for e in drop}
    return from_edges(8, edges)


def _replicated_c5() -> Graph:
    return replicate_vertex(replicate_vertex(cycle(5), 0), 2)


def _t6() -> Graph:
    return from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 1), (3, 2), (4, 0), (4, 2), (5, 0), (5, 1)])


_FIXED = {
    "R13": lambda: circulant(13, [1, 5]),
    "W8": lambda: _w8([]),
    "W81": lambda: _w8([(0, 4)]),
    "W82": lambda: _w8([(0, 4), (1, 5)]),
    "Ramsey44_17": lambda: circulant(17, [1, 2, 4, 8]),
    "C33": lambda: circulant(10, [1, 2]),
    "ReplicatedC5": _replicated_c5,
    "T6": _t6,
    "Grotzsch": lambda: mycielskian(cycle(5)),
}

NAMES = sorted(_FIXED) + ["C<k>", "K<k>", "E<k>", "<t>C5"]


def named_graph(name: str) -> Graph:
    """Build a catalog graph: fixed names, or Ck, Kk, Ek (edgeless), tC5."""
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"E(\d+)", name)
    if m:
        return empty_graph(int(m.group(1)))
    m = re.fullmatch(r"(\d+)C5", name)
    if m:
        return union_of([cycle(5)] * int(m.group(1)))
    raise UnknownGraphName(name)


# -- Ramsey catalogs -------------------------------------------------------------

class CatalogError(ValueError):
    """A submitted graph fails the (3, l)-Ramsey graph conditions."""

    def __init__(self, line: int, reason: str, kind: str = "validation") -> None:
        super().__init__(f"line {line}: {kind} error: {reason}")
        self.line = line
        self.reason = reason
        self.kind = kind


@dataclass
class RamseyCatalog:
    """Validated (3, l)-Ramsey graphs keyed by l."""

    entries: dict[int, list[Graph]] = field(default_factory=dict)
    source: str = ""

    def get(self, l: int) -> Graph | None:
        graphs = self.entries.get(l)
        return graphs[0] if graphs else None


def builtin_catalog() -> RamseyCatalog:
    return RamseyCatalog({2: [complete(2)], 3: [cycle(5)], 4: [named_graph("W8")],
                          5: [named_graph("R13")]}, "built-in")


def bundled_catalog_path(name: str = "ramsey36_17.g6") -> str:
    """Path of a catalog file shipped with the package."""
    return str(resources.files("gaplab") / "data" / name)


def check_ramsey_graph(g: Graph, l: int, t: RamseyTable) -> str | None:
    """Reason g is not a (3, l)-Ramsey graph, or None if it is one."""
    r = t.r(l)
    if not r.is_exact:
        return f"R(3,{l}) is not known exactly"
    if g.n != r.value - 1:
        return f"order {g.n} differs from R(3,{l})-1 = {r.value - 1}"
    if not is_triangle_free(g):
        return "graph contains a triangle"
    a = stable_set_number(g)[0]
    if a != l - 1:
        return f"stability number {a} differs from {l - 1}"
    return None


def ingest_ramsey_catalog(path: str, l: int, t: RamseyTable,
                          into: RamseyCatalog | None = None) -> RamseyCatalog:
    """Read graph6 lines and validate each as a (3, l)-Ramsey graph.

    Raises OSError on I/O failure, CatalogError (carrying the line number)
    on a parse or validation failure.
    """
    cat = into or RamseyCatalog(source=path)
    accepted = []
    with open(path, encoding="ascii", errors="replace") as fh:
        lines = fh.readlines()
    try:
        parsed = list(read_graph6_lines(lines))
    except Graph6Error as exc:
        bad = next(i for i, ln in enumerate(lines, 1) if _bad_line(ln))
        raise CatalogError(bad, str(exc), "parse") from exc
    for no, g in parsed:
        reason = check_ramsey_graph(g, l, t)
        if reason:
            raise CatalogError(no, reason)
        accepted.append(g)
    cat.entries.setdefault(l, []).extend(accepted)
    if not cat.source:
        cat.source = path
    return cat


def _bad_line(line: str) -> bool:
    s = line.strip()
    if not s or s.startswith("#"):
        return False
    try:
        decode_graph6(s)
    except Graph6Error:
        return True
    return False


# -- stable gap-optimal graphs ------------------------------------------------------

class ConstructionError(RuntimeError):
    pass


def stable_gap_optimal(n: int, t: RamseyTable, catalog: RamseyCatalog | None = None) -> Graph:
    """A triangle-free graph on n vertices with alpha = alpha(n) and the
    largest triangle-free gap, assembled from (3, a+1)-Ramsey graphs.

    Cases: n Ramsey-perfect uses two Ramsey graphs side by side; n an even
    Ramsey number uses the previous Ramsey graph plus an isolated vertex;
    otherwise an order-n induced subgraph (the first n vertices) of the
    Ramsey graph for alpha(n).
    """
    cat = catalog or builtin_catalog()
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return empty_graph(0)
    a = alpha_of(n, t)
    if not a.is_exact:
        raise ConstructionError(f"alpha({n}) is not known exactly ({a})")
    alpha = a.value

    def ramsey_graph(k: int) -> Graph:
        # (3, k+1)-Ramsey graph; k = 0 is the empty graph
        if k == 0:
            return empty_graph(0)
        g = cat.get(k + 1)
        if g is None:
            raise ConstructionError(f"catalog has no (3,{k + 1})-Ramsey graph")
        return g

    perfect, cert = is_ramsey_perfect(n, t)
    ram = is_ramsey_number(n, t)
    if perfect == YES and cert is not None:
        return disjoint_union(ramsey_graph(cert.alpha1), ramsey_graph(cert.alpha2))
    if ram == YES and n % 2 == 0:
        return disjoint_union(ramsey_graph(alpha - 1), empty_graph(1))
    if perfect != NO or ram not in (YES, NO):
        raise ConstructionError(f"case for n={n} is undecided by the table")
    host = ramsey_graph(alpha)
    if host.n < n:
        raise ConstructionError(f"(3,{alpha + 1})-Ramsey graph has only {host.n} vertices")
    return induced_subgraph(host, (1 << n) - 1)


def omega_alpha(g: Graph) -> tuple[int, int]:
    return clique_number(g)[0], stable_set_number(g)[0]
