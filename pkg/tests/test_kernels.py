"""The compiled kernels and the pure-Python fallback must agree exactly."""

import itertools
import os
import random
import subprocess
import sys

import pytest

from gaplab import _pykernels as py
from gaplab import kernels
from gaplab.graph import relabel
from gaplab.properties import random_graph

try:
    from gaplab import _ckernels as ck
except ImportError:  # pragma: no cover - exercised only without a compiler
    ck = None

needs_c = pytest.mark.skipif(ck is None, reason="compiled kernels not built")


def _graphs(count, n_max=12, seed=7):
    r = random.Random(seed)
    return [random_graph(r, n_max) for _ in range(count)]


def test_backend_selection():
    assert kernels.BACKEND in ("c", "python")
    if os.environ.get("GAPLAB_PURE") == "1":
        assert kernels.BACKEND == "python"
    elif ck is not None:
        assert kernels.BACKEND == "c"


def test_pure_flag_forces_fallback():
    out = subprocess.run([sys.executable, "-c", "from gaplab import kernels; print(kernels.BACKEND)"],
                         env={**os.environ, "GAPLAB_PURE": "1"}, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@needs_c
def test_stable_and_colour_parity():
    for g in _graphs(3000):
        rows = list(g.adj)
        assert ck.stable_max(rows, g.full) == py.stable_max(rows, g.full)
        assert ck.color_exact(rows, g.n) == py.color_exact(rows, g.n)


@needs_c
def test_subset_profile_parity():
    for g in _graphs(300, n_max=9):
        assert ck.subset_profile(list(g.adj), g.n) == py.subset_profile(list(g.adj), g.n)


@needs_c
def test_canon_parity():
    for g in _graphs(2000):
        c1 = ck.canon(list(g.adj), g.n, [g.full])
        c2 = py.canon(list(g.adj), g.n, [g.full])
        assert list(c1[1]) == list(c2[1])


@needs_c
def test_augment_and_census_parity():
    for n in range(1, 8):
        blob = kernels.extend_level(b"", 0, 0, 0)
        for k in range(1, n - 1):
            blob = kernels.extend_level(blob, k, 0, 0)
        if n == 1:
            continue
        a = ck.extend_stats(blob, n - 1, 0, 0, 10)
        b = py.extend_stats(blob, n - 1, 0, 0, 10)
        assert a[0] == b[0] and [list(r) for r in a[1]] == [list(r) for r in b[1]] and a[2] == b[2]
        assert [list(w) for w in a[3]] == [list(w) for w in b[3]]
    for mo, ma in [(3, 0), (0, 4), (4, 4)]:
        blob = b""
        for k in range(0, 7):
            c = ck.extend_level(blob, k, mo, ma)
            p = py.extend_level(blob, k, mo, ma)
            assert c == p
            blob = c


def test_canon_is_isomorphism_invariant():
    r = random.Random(3)
    for g in _graphs(1500):
        perm = list(range(g.n))
        r.shuffle(perm)
        h = relabel(g, perm)
        a = kernels.canon(list(g.adj), g.n, [g.full])[1]
        b = kernels.canon(list(h.adj), h.n, [h.full])[1]
        assert list(a) == list(b)


def test_canon_separates_non_isomorphic_small_graphs():
    # all labelled graphs on 5 vertices: 34 classes by brute force
    n = 5
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        forms.add(tuple(kernels.canon(adj, n, [(1 << n) - 1])[1]))
    assert len(forms) == 34


def test_stable_max_returns_least_maximum_set():
    for g in _graphs(300, n_max=9):
        k, mask = kernels.stable_max(list(g.adj), g.full)
        best = None
        for s in range(g.full + 1):
            if all(not (g.adj[v] & s) for v in range(g.n) if s >> v & 1):
                c = s.bit_count()
                if best is None or c > best[0] or (c == best[0] and _lex(s) < _lex(best[1])):
                    best = (c, s)
        assert k == best[0] and mask == best[1]


def _lex(s):
    return [v for v in range(64) if s >> v & 1]


def test_python_fallback_census_counts():
    blob = b""
    counts = []
    for k in range(0, 6):
        blob = py.extend_level(blob, k, 0, 0)
        counts.append(len(blob) // (2 * (k + 1)))
    assert counts == [1, 2, 4, 11, 34, 156]
