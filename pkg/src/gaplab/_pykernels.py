"""Pure-Python kernels, a faithful mirror of csrc/gapcore.c.

Graphs are lists of int row masks.  Every function here makes exactly the
same choices as its C counterpart, so witnesses and canonical forms agree
whichever backend is loaded.
"""

from __future__ import annotations

import sys

BACKEND = "python"

if sys.version_info >= (3, 10):
    def _pop(x: int) -> int:
        return x.bit_count()
else:  # pragma: no cover
    def _pop(x: int) -> int:
        return bin(x).count("1")


def _ctz(x: int) -> int:
    return (x & -x).bit_length() - 1


def _full(n: int) -> int:
    return (1 << n) - 1


# -- maximum stable set ---------------------------------------------------

def _cover_bound(adj, cand: int) -> int:
    k = 0
    while cand:
        v = _ctz(cand)
        cand &= cand - 1
        c = cand & adj[v]
        while c:
            u = _ctz(c)
            cand &= ~(1 << u)
            c &= adj[u]
        k += 1
    return k


def stable_max(adj, cand: int) -> tuple[int, int]:
    """Size and lexicographically least maximum stable subset of ``cand``."""
    best = [-1, 0]

    def rec(cur: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0] = size
                best[1] = cur
            return
        if size + _pop(cand) <= best[0]:
            return
        if size + _cover_bound(adj, cand) <= best[0]:
            return
        v = _ctz(cand)
        bit = 1 << v
        nv = adj[v] & cand
        rec(cur | bit, size + 1, cand & ~nv & ~bit)
        if nv:
            rec(cur, size, cand & ~bit)

    rec(0, 0, cand)
    return best[0], best[1]


# -- exact colouring ------------------------------------------------------

def _saturation(cls, k: int, row: int) -> int:
    return sum(1 for j in range(k) if cls[j] & row)


def _dsatur_greedy(adj, n: int) -> tuple[int, list[int]]:
    cls: list[int] = []
    colors = [0] * n
    U = _full(n)
    while U:
        bv, bs, bd = -1, -1, -1
        t = U
        while t:
            v = _ctz(t)
            t &= t - 1
            s = _saturation(cls, len(cls), adj[v])
            d = _pop(adj[v])
            if s > bs or (s == bs and d > bd):
                bv, bs, bd = v, s, d
        c = 0
        while c < len(cls) and cls[c] & adj[bv]:
            c += 1
        if c == len(cls):
            cls.append(0)
        cls[c] |= 1 << bv
        colors[bv] = c
        U &= ~(1 << bv)
    return len(cls), colors


def color_exact(adj, n: int) -> tuple[int, list[int]]:
    """Chromatic number and an optimal colouring (colour index per vertex)."""
    if n == 0:
        return 0, []
    full = _full(n)
    comp = [~adj[i] & full & ~(1 << i) for i in range(n)]
    lb, q = stable_max(comp, full)
    best, bestcolors = _dsatur_greedy(adj, n)
    if best > lb:
        st = {"best": best, "bestcolors": bestcolors}
        colors = [0] * n
        cls = [0] * n

        def rec(U: int, k: int) -> None:
            if not U:
                if k < st["best"]:
                    st["best"] = k
                    st["bestcolors"] = colors[:]
                return
            if k >= st["best"]:
                return
            bv, bs, bd = -1, -1, -1
            t = U
            while t:
                v = _ctz(t)
                t &= t - 1
                s = _saturation(cls, k, adj[v])
                d = _pop(adj[v] & U)
                if s > bs or (s == bs and d > bd):
                    bv, bs, bd = v, s, d
            bit = 1 << bv
            for j in range(k):
                if not cls[j] & adj[bv]:
                    cls[j] |= bit
                    colors[bv] = j
                    rec(U & ~bit, k)
                    cls[j] &= ~bit
                    if st["best"] <= lb:
                        return
            if k + 1 < st["best"]:
                cls[k] = bit
                colors[bv] = k
                rec(U & ~bit, k + 1)
                cls[k] = 0

        k = 0
        U = full
        t = q
        while t:
            v = _ctz(t)
            t &= t - 1
            cls[k] = 1 << v
            colors[v] = k
            k += 1
            U &= ~(1 << v)
        rec(U, k)
        best, bestcolors = st["best"], st["bestcolors"]
    return best, list(bestcolors)


# -- subset profile -------------------------------------------------------

def subset_profile(adj, n: int) -> tuple[bytes, bytes]:
    """alpha and theta of G[S] for every vertex subset S (indexed by mask)."""
    total = 1 << n
    alpha = bytearray(total)
    theta = bytearray(total)
    for S in range(1, total):
        v = _ctz(S)
        rest = S & ~(1 << v)
        a1 = alpha[rest]
        a2 = 1 + alpha[rest & ~adj[v]]
        alpha[S] = a1 if a1 > a2 else a2
        best = [255]

        def bk(R: int, P: int, X: int) -> None:
            if not P:
                if not X:
                    val = theta[S & ~R]
                    if val < best[0]:
                        best[0] = val
                return
            px = P | X
            pu, pc = -1, -1
            while px:
                u = _ctz(px)
                px &= px - 1
                cnt = _pop(P & adj[u])
                if cnt > pc:
                    pc, pu = cnt, u
            cand = P & ~adj[pu]
            while cand:
                w = _ctz(cand)
                cand &= cand - 1
                bk(R | (1 << w), P & adj[w], X & adj[w])
                P &= ~(1 << w)
                X |= 1 << w

        bk(1 << v, adj[v] & S, 0)
        theta[S] = 1 + best[0]
    return bytes(alpha), bytes(theta)


# -- canonical labelling --------------------------------------------------

def _refine(adj, n: int, cells: list[int], active: list[int]) -> tuple[list[int], list[int]]:
    while len(cells) < n:
        try:
            si = active.index(1)
        except ValueError:
            break
        active[si] = 0
        W = cells[si]
        nc: list[int] = []
        na: list[int] = []
        for j, C in enumerate(cells):
            if not C & (C - 1):
                nc.append(C)
                na.append(active[j])
                continue
            groups: dict[int, int] = {}
            t = C
            while t:
                v = _ctz(t)
                t &= t - 1
                k = _pop(adj[v] & W)
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                nc.append(C)
                na.append(active[j])
                continue
            for k in sorted(groups):
                nc.append(groups[k])
                na.append(1)
        cells, active = nc, na
    return cells, active


class _Canon:
    __slots__ = ("adj", "n", "best_rows", "best_lab", "auts", "path", "leaves")

    def __init__(self, adj, n: int) -> None:
        self.adj = adj
        self.n = n
        self.best_rows: list[int] | None = None
        self.best_lab: list[int] = []
        self.auts: list[list[int]] = []
        self.path = [0] * n
        self.leaves = 0

    def leaf(self, cells: list[int]) -> None:
        n = self.n
        lab = [_ctz(c) for c in cells]
        pos = [0] * n
        for k, x in enumerate(lab):
            pos[x] = k
        self.leaves += 1
        rows = []
        cmp = 0 if self.best_rows is not None else -1
        for k in range(n):
            r = 0
            t = self.adj[lab[k]]
            while t:
                r |= 1 << pos[_ctz(t)]
                t &= t - 1
            rows.append(r)
            if cmp == 0:
                b = self.best_rows[k]
                if r < b:
                    cmp = -1
                elif r > b:
                    return
        if cmp < 0:
            self.best_rows = rows
            self.best_lab = lab
            return
        if len(self.auts) < 64:
            g = [0] * n
            for k in range(n):
                g[self.best_lab[k]] = lab[k]
            if g != list(range(n)):
                self.auts.append(g)

    def orbit_hits(self, depth: int, v: int, explored: int) -> bool:
        usable = [a for a in self.auts
                  if all(a[self.path[i]] == self.path[i] for i in range(depth))]
        if not usable:
            return False
        orb = frontier = 1 << v
        while frontier:
            x = _ctz(frontier)
            frontier &= frontier - 1
            for a in usable:
                y = a[x]
                if not orb >> y & 1:
                    orb |= 1 << y
                    frontier |= 1 << y
        return bool(orb & explored)

    def search(self, cells: list[int], depth: int) -> None:
        if len(cells) == self.n:
            self.leaf(cells)
            return
        ti = 0
        while not cells[ti] & (cells[ti] - 1):
            ti += 1
        T = cells[ti]
        explored = 0
        t = T
        while t:
            v = _ctz(t)
            t &= t - 1
            if explored and self.orbit_hits(depth, v, explored):
                continue
            explored |= 1 << v
            ch = cells[:ti] + [1 << v, T & ~(1 << v)] + cells[ti + 1:]
            act = [0] * ti + [1, 0] + [0] * (len(cells) - ti - 1)
            ch, _ = _refine(self.adj, self.n, ch, act)
            self.path[depth] = v
            self.search(ch, depth + 1)


def canon(adj, n: int, cells) -> tuple[list[int], list[int], int, bool]:
    """Canonical labelling under an ordered initial partition.

    Returns (lab, rows, leaves, discrete_root) where lab[k] is the vertex
    placed at position k and rows are the relabelled adjacency rows.
    """
    if n == 0:
        return [], [], 0, True
    cells = list(cells)
    cells, _ = _refine(adj, n, cells, [1] * len(cells))
    c = _Canon(adj, n)
    c.search(cells, 0)
    return c.best_lab, c.best_rows, c.leaves, len(cells) == n


# -- canonical augmentation -----------------------------------------------

def _pointed_form(g, n: int, x: int) -> list[int]:
    cells = [1 << x, _full(n) & ~(1 << x)] if n > 1 else [1]
    return canon(g, n, cells)[1]


def augment(parent, np_: int, max_omega: int = 0, max_alpha: int = 0) -> list[list[int]]:
    """Children of one parent class under canonical augmentation."""
    n = np_ + 1
    v = np_
    pfull = _full(np_)
    ptriv = True
    if np_ > 1:
        cells, _ = _refine(parent, np_, [pfull], [1])
        ptriv = len(cells) == np_
    pcomp = [~parent[i] & pfull & ~(1 << i) for i in range(np_)]
    pdeg = [_pop(parent[i]) for i in range(np_)]
    forms: set[tuple[int, ...]] = set()
    out: list[list[int]] = []
    vbit = 1 << v
    for S in range(pfull + 1):
        k = _pop(S)
        deg = [pdeg[i] + (S >> i & 1) for i in range(np_)]
        if np_ and max(deg) > k:
            continue
        if max_omega:
            if max_omega == 2:
                if any(parent[u] & S for u in range(np_) if S >> u & 1):
                    continue
            elif k >= max_omega - 1 and stable_max(pcomp, S)[0] >= max_omega - 1:
                continue
        if max_alpha:
            rest = pfull & ~S
            if _pop(rest) >= max_alpha - 1 and stable_max(parent, rest)[0] >= max_alpha - 1:
                continue
        child = [parent[i] | (vbit if S >> i & 1 else 0) for i in range(np_)]
        child.append(S)
        deg.append(k)

        def key(x: int) -> int:
            sd = tr = 0
            t = child[x]
            while t:
                y = _ctz(t)
                t &= t - 1
                sd += deg[y]
                tr += _pop(child[y] & child[x])
            return (sd << 16) | tr

        keyv = key(v)
        M = [v]
        reject = False
        for u in range(np_):
            if deg[u] != k:
                continue
            ku = key(u)
            if ku > keyv:
                reject = True
                break
            if ku == keyv:
                M.append(u)
        if reject:
            continue
        if not ptriv or len(M) > 1:
            fv = _pointed_form(child, n, v)
            if any(_pointed_form(child, n, u) < fv for u in sorted(M[1:])):
                continue
            if not ptriv:
                tf = tuple(fv)
                if tf in forms:
                    continue
                forms.add(tf)
        out.append(child)
    return out


# -- census loops over packed levels --------------------------------------

def _unpack(blob: bytes, np_: int):
    import struct
    if np_ == 0:
        yield []
        return
    step = 2 * np_
    fmt = "<%dH" % np_
    for off in range(0, len(blob), step):
        yield list(struct.unpack_from(fmt, blob, off))


def _alpha_theta(adj, n: int) -> tuple[int, int]:
    full = _full(n)
    comp = [~adj[i] & full & ~(1 << i) for i in range(n)]
    return stable_max(adj, full)[0], color_exact(comp, n)[0]


def extend_level(blob: bytes, np_: int, max_omega: int, max_alpha: int) -> bytes:
    import struct
    n = np_ + 1
    if n > 16:
        raise ValueError("packed levels hold at most 16 vertices")
    out = bytearray()
    fmt = "<%dH" % n
    for parent in _unpack(bytes(blob), np_):
        for child in augment(parent, np_, max_omega, max_alpha):
            out += struct.pack(fmt, *child)
    return bytes(out)


def extend_stats(blob: bytes, np_: int, max_omega: int, max_alpha: int,
                 witness_limit: int):
    n = np_ + 1
    if n > 16:
        raise ValueError("packed levels hold at most 16 vertices")
    hist = [[0] * (n + 1) for _ in range(n + 1)]
    maxgap = -1000
    witnesses: list[list[int]] = []
    total = 0
    for parent in _unpack(bytes(blob), np_):
        for child in augment(parent, np_, max_omega, max_alpha):
            a, t = _alpha_theta(child, n)
            hist[t][a] += 1
            g = t - a
            if g > maxgap:
                maxgap = g
                witnesses = []
            if g == maxgap and len(witnesses) < witness_limit:
                witnesses.append(child)
            total += 1
    return total, hist, maxgap, witnesses


def labeled_stats(n: int, witness_limit: int):
    if n > 8:
        raise ValueError("labelled sweep limited to 8 vertices")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    hist = [[0] * (n + 1) for _ in range(n + 1)]
    maxgap = -1000
    witnesses: list[list[int]] = []
    for mask in range(1 << len(edges)):
        adj = [0] * n
        for k, (i, j) in enumerate(edges):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        a, t = _alpha_theta(adj, n) if n else (0, 0)
        hist[t][a] += 1
        g = t - a
        if g > maxgap:
            maxgap = g
            witnesses = []
        if g == maxgap and len(witnesses) < witness_limit:
            witnesses.append(adj)
    return hist, maxgap, witnesses
