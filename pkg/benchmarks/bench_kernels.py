"""Time the compiled kernels against the pure-Python fallback on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from gaplab import _pykernels
from gaplab.constructions import named_graph
from gaplab.properties import random_graph

try:
    from gaplab import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _cases(seed: int):
    rng = random.Random(seed)
    graphs = [random_graph(rng, n_max=12, n_min=8) for _ in range(200)]
    r13 = named_graph("R13")
    g12 = graphs[0] if graphs[0].n == 12 else random_graph(rng, n_max=12, n_min=12)
    return [
        ("stable_max x200", lambda k: [k.stable_max(list(g.adj), g.full) for g in graphs]),
        ("color_exact x200", lambda k: [k.color_exact(list(g.adj), g.n) for g in graphs]),
        ("canon x200", lambda k: [k.canon(list(g.adj), g.n, [g.full]) for g in graphs]),
        ("subset_profile R13", lambda k: k.subset_profile(list(r13.adj), 13)),
        ("subset_profile n=12", lambda k: k.subset_profile(list(g12.adj), 12)),
        ("extend_level n=6", lambda k: _levels(k, 6)),
        ("labeled_stats n=6", lambda k: k.labeled_stats(6, 64)),
    ]


def _levels(k, n: int) -> int:
    blob = b""
    for m in range(n):
        blob = k.extend_level(blob, m, 0, 0)
    return len(blob)


def _best(fn, k, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(k)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")
    print(f"{'kernel':<22}{'C (s)':>12}{'Python (s)':>14}{'speedup':>10}")
    for name, fn in _cases(args.seed):
        c = _best(fn, _ckernels, args.repeat)
        py = _best(fn, _pykernels, 1)
        print(f"{name:<22}{c:>12.5f}{py:>14.4f}{py / c:>9.0f}x")


if __name__ == "__main__":
    main()
