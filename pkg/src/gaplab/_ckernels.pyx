# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: thin wrappers over csrc/gapcore.c plus the census loops."""

from libc.stdint cimport uint8_t, uint16_t, uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "c"

cdef extern from "gapcore.h":
    ctypedef uint64_t gc_set
    int GC_MAXN
    int gc_stable_max(const gc_set *adj, gc_set cand, gc_set *out)
    int gc_color_exact(const gc_set *adj, int n, int *colors)
    void gc_subset_profile(const gc_set *adj, int n, uint8_t *alpha, uint8_t *theta)
    long gc_canon(const gc_set *adj, int n, const gc_set *cells, int ncells,
                  int *lab_out, gc_set *rows_out, int *discrete_root)
    long gc_augment(const gc_set *parent, int np, int max_omega, int max_alpha,
                    gc_set *out, long cap)


cdef int _load(rows, gc_set *adj) except -1:
    cdef int n = len(rows)
    if n > 64:
        raise ValueError("at most 64 vertices")
    for i in range(n):
        adj[i] = rows[i]
    return n


def stable_max(rows, cand):
    cdef gc_set adj[64]
    cdef gc_set out = 0
    _load(rows, adj)
    cdef int k = gc_stable_max(adj, cand, &out)
    return k, out


def color_exact(rows, int n):
    cdef gc_set adj[64]
    cdef int colors[64]
    _load(rows, adj)
    cdef int k = gc_color_exact(adj, n, colors)
    return k, [colors[i] for i in range(n)]


def subset_profile(rows, int n):
    cdef gc_set adj[64]
    if n > 26:
        raise ValueError("subset profile limited to 26 vertices")
    _load(rows, adj)
    alpha = bytearray(1 << n)
    theta = bytearray(1 << n)
    cdef uint8_t[::1] a = alpha
    cdef uint8_t[::1] t = theta
    gc_subset_profile(adj, n, &a[0], &t[0])
    return bytes(alpha), bytes(theta)


def canon(rows, int n, cells):
    cdef gc_set adj[64]
    cdef gc_set cs[64]
    cdef gc_set out[64]
    cdef int lab[64]
    cdef int disc = 0
    if n == 0:
        return [], [], 0, True
    _load(rows, adj)
    cdef int nc = len(cells)
    for i in range(nc):
        cs[i] = cells[i]
    cdef long leaves = gc_canon(adj, n, cs, nc, lab, out, &disc)
    return [lab[i] for i in range(n)], [out[i] for i in range(n)], leaves, bool(disc)


def augment(rows, int np, int max_omega=0, int max_alpha=0):
    cdef gc_set adj[64]
    _load(rows, adj)
    if np > 24:
        raise ValueError("augmentation limited to 24 parent vertices")
    cdef long cap = 1 << np
    cdef gc_set *buf = <gc_set *> malloc(sizeof(gc_set) * (np + 1) * cap)
    cdef long cnt
    try:
        cnt = gc_augment(adj, np, max_omega, max_alpha, buf, cap)
        return [[buf[c * (np + 1) + i] for i in range(np + 1)] for c in range(cnt)]
    finally:
        free(buf)


# -- census loops over packed levels (uint16 rows, n <= 16) ---------------

def extend_level(const uint8_t[::1] blob, int np, int max_omega, int max_alpha):
    """Children of every parent in ``blob``; returns the packed next level."""
    cdef int n = np + 1
    if n > 16:
        raise ValueError("packed levels hold at most 16 vertices")
    cdef long nparents = blob.shape[0] // (2 * np) if np else 1
    cdef const uint16_t *rows = <const uint16_t *> &blob[0] if blob.shape[0] else NULL
    cdef long cap = 1 << np
    cdef gc_set adj[64]
    cdef gc_set *buf = <gc_set *> malloc(sizeof(gc_set) * n * cap)
    cdef long p, c, cnt
    cdef int i
    out = bytearray()
    cdef uint16_t row[16]
    try:
        for p in range(nparents):
            for i in range(np):
                adj[i] = rows[p * np + i]
            cnt = gc_augment(adj, np, max_omega, max_alpha, buf, cap)
            for c in range(cnt):
                for i in range(n):
                    row[i] = <uint16_t> buf[c * n + i]
                out += (<char *> row)[:2 * n]
    finally:
        free(buf)
    return bytes(out)


cdef inline int _alpha_theta(gc_set *adj, int n, int *alpha, int *theta):
    cdef gc_set comp[64]
    cdef gc_set full = (<gc_set> 1 << n) - 1
    cdef int colors[64]
    cdef int i
    for i in range(n):
        comp[i] = ~adj[i] & full & ~(<gc_set> 1 << i)
    alpha[0] = gc_stable_max(adj, full, NULL)
    theta[0] = gc_color_exact(comp, n, colors)
    return 0


def extend_stats(const uint8_t[::1] blob, int np, int max_omega, int max_alpha,
                 int witness_limit):
    """Augment every parent and tally (theta, alpha) of each child.

    Returns (count, hist, max_gap, witnesses) where hist[theta][alpha] counts
    children and witnesses holds up to ``witness_limit`` children attaining
    the largest theta - alpha, as row lists.
    """
    cdef int n = np + 1
    if n > 16:
        raise ValueError("packed levels hold at most 16 vertices")
    cdef long nparents = blob.shape[0] // (2 * np) if np else 1
    cdef const uint16_t *rows = <const uint16_t *> &blob[0] if blob.shape[0] else NULL
    cdef long cap = 1 << np
    cdef gc_set adj[64]
    cdef gc_set *buf = <gc_set *> malloc(sizeof(gc_set) * n * cap)
    cdef long p, c, cnt, total = 0
    cdef int i, a, t, g
    cdef int maxgap = -1000
    cdef long hist[17][17]
    for a in range(17):
        for t in range(17):
            hist[a][t] = 0
    witnesses = []
    try:
        for p in range(nparents):
            for i in range(np):
                adj[i] = rows[p * np + i]
            cnt = gc_augment(adj, np, max_omega, max_alpha, buf, cap)
            for c in range(cnt):
                _alpha_theta(&buf[c * n], n, &a, &t)
                hist[t][a] += 1
                g = t - a
                if g > maxgap:
                    maxgap = g
                    witnesses = []
                if g == maxgap and len(witnesses) < witness_limit:
                    witnesses.append([buf[c * n + i] for i in range(n)])
            total += cnt
    finally:
        free(buf)
    return (total, [[hist[t][a] for a in range(n + 1)] for t in range(n + 1)],
            maxgap, witnesses)


def labeled_stats(int n, int witness_limit):
    """(theta, alpha) tally over all 2^(n choose 2) labelled graphs."""
    if n > 8:
        raise ValueError("labelled sweep limited to 8 vertices")
    cdef int m = n * (n - 1) // 2
    cdef int eu[28]
    cdef int ev[28]
    cdef int k = 0, i, j, a, t, g
    for i in range(n):
        for j in range(i + 1, n):
            eu[k] = i
            ev[k] = j
            k += 1
    cdef long hist[9][9]
    for i in range(9):
        for j in range(9):
            hist[i][j] = 0
    cdef gc_set adj[64]
    cdef uint64_t mask
    cdef int maxgap = -1000
    witnesses = []
    for mask in range(<uint64_t> 1 << m):
        for i in range(n):
            adj[i] = 0
        for k in range(m):
            if mask >> k & 1:
                adj[eu[k]] |= <gc_set> 1 << ev[k]
                adj[ev[k]] |= <gc_set> 1 << eu[k]
        if n:
            _alpha_theta(adj, n, &a, &t)
        else:
            a = 0
            t = 0
        hist[t][a] += 1
        g = t - a
        if g > maxgap:
            maxgap = g
            witnesses = []
        if g == maxgap and len(witnesses) < witness_limit:
            witnesses.append([adj[i] for i in range(n)])
    return [[hist[t][a] for a in range(n + 1)] for t in range(n + 1)], maxgap, witnesses
