/* Bit-parallel kernels for small graphs (n <= 64, one word per row).
 *
 * Every routine here has a line-by-line twin in gaplab/_pykernels.py; the
 * two must make identical choices so that witnesses and canonical forms
 * agree across backends.
 */
#include <stdlib.h>
#include <string.h>

#include "gapcore.h"

#define BIT(i) ((gc_set)1 << (i))
#define POP(x) __builtin_popcountll(x)
#define CTZ(x) __builtin_ctzll(x)

static gc_set full_mask(int n)
{
    return n >= 64 ? ~(gc_set)0 : BIT(n) - 1;
}

/* ------------------------------------------------------------------ */
/* maximum stable set                                                  */

typedef struct {
    const gc_set *adj;
    int best;
    gc_set bestset;
} mis_t;

/* Number of cliques in a greedy clique cover of cand (upper bound on alpha). */
static int cover_bound(const gc_set *adj, gc_set cand)
{
    int k = 0;
    while (cand) {
        int v = CTZ(cand);
        cand &= cand - 1;
        gc_set c = cand & adj[v];
        while (c) {
            int u = CTZ(c);
            cand &= ~BIT(u);
            c &= adj[u];
        }
        k++;
    }
    return k;
}

static void mis_rec(mis_t *m, gc_set cur, int size, gc_set cand)
{
    if (!cand) {
        if (size > m->best) {
            m->best = size;
            m->bestset = cur;
        }
        return;
    }
    if (size + POP(cand) <= m->best)
        return;
    if (size + cover_bound(m->adj, cand) <= m->best)
        return;
    int v = CTZ(cand);
    gc_set nv = m->adj[v] & cand;
    mis_rec(m, cur | BIT(v), size + 1, cand & ~nv & ~BIT(v));
    if (nv)
        mis_rec(m, cur, size, cand & ~BIT(v));
}

int gc_stable_max(const gc_set *adj, gc_set cand, gc_set *out)
{
    mis_t m;
    m.adj = adj;
    m.best = -1;
    m.bestset = 0;
    mis_rec(&m, 0, 0, cand);
    if (out)
        *out = m.bestset;
    return m.best;
}

/* ------------------------------------------------------------------ */
/* exact colouring: DSATUR branch and bound                            */

typedef struct {
    const gc_set *adj;
    int n, best, lb;
    int colors[GC_MAXN];
    int bestcolors[GC_MAXN];
    gc_set cls[GC_MAXN];
} col_t;

static int saturation(const gc_set *cls, int k, gc_set row)
{
    int s = 0;
    for (int j = 0; j < k; j++)
        if (cls[j] & row)
            s++;
    return s;
}

static int dsatur_greedy(const gc_set *adj, int n, int *colors)
{
    gc_set cls[GC_MAXN];
    int k = 0;
    gc_set U = full_mask(n);
    while (U) {
        int bv = -1, bs = -1, bd = -1;
        gc_set t = U;
        while (t) {
            int v = CTZ(t);
            t &= t - 1;
            int s = saturation(cls, k, adj[v]);
            int d = POP(adj[v]);
            if (s > bs || (s == bs && d > bd)) {
                bv = v;
                bs = s;
                bd = d;
            }
        }
        int c = 0;
        while (c < k && (cls[c] & adj[bv]))
            c++;
        if (c == k)
            cls[k++] = 0;
        cls[c] |= BIT(bv);
        colors[bv] = c;
        U &= ~BIT(bv);
    }
    return k;
}

static void col_rec(col_t *c, gc_set U, int k)
{
    if (!U) {
        if (k < c->best) {
            c->best = k;
            memcpy(c->bestcolors, c->colors, sizeof(int) * c->n);
        }
        return;
    }
    if (k >= c->best)
        return;
    int bv = -1, bs = -1, bd = -1;
    gc_set t = U;
    while (t) {
        int v = CTZ(t);
        t &= t - 1;
        int s = saturation(c->cls, k, c->adj[v]);
        int d = POP(c->adj[v] & U);
        if (s > bs || (s == bs && d > bd)) {
            bv = v;
            bs = s;
            bd = d;
        }
    }
    for (int j = 0; j < k; j++) {
        if (!(c->cls[j] & c->adj[bv])) {
            c->cls[j] |= BIT(bv);
            c->colors[bv] = j;
            col_rec(c, U & ~BIT(bv), k);
            c->cls[j] &= ~BIT(bv);
            if (c->best <= c->lb)
                return;
        }
    }
    if (k + 1 < c->best) {
        c->cls[k] = BIT(bv);
        c->colors[bv] = k;
        col_rec(c, U & ~BIT(bv), k + 1);
        c->cls[k] = 0;
    }
}

int gc_color_exact(const gc_set *adj, int n, int *colors)
{
    if (n == 0)
        return 0;
    gc_set full = full_mask(n);
    gc_set comp[GC_MAXN];
    for (int i = 0; i < n; i++)
        comp[i] = ~adj[i] & full & ~BIT(i);
    gc_set q;
    int lb = gc_stable_max(comp, full, &q);

    col_t c;
    memset(&c, 0, sizeof(c));
    c.adj = adj;
    c.n = n;
    c.lb = lb;
    c.best = dsatur_greedy(adj, n, c.bestcolors);
    if (c.best > lb) {
        int k = 0;
        gc_set U = full;
        gc_set t = q;
        while (t) {
            int v = CTZ(t);
            t &= t - 1;
            c.cls[k] = BIT(v);
            c.colors[v] = k;
            k++;
            U &= ~BIT(v);
        }
        col_rec(&c, U, k);
    }
    memcpy(colors, c.bestcolors, sizeof(int) * n);
    return c.best;
}

/* ------------------------------------------------------------------ */
/* subset profile                                                      */

typedef struct {
    const gc_set *adj;
    const uint8_t *theta;
    gc_set S;
    int best;
} bk_t;

/* Bron-Kerbosch with pivot; every maximal clique R of G[S] through the
 * fixed vertex proposes theta[S - R]. */
static void bk_rec(bk_t *b, gc_set R, gc_set P, gc_set X)
{
    if (!P) {
        if (!X) {
            int val = b->theta[b->S & ~R];
            if (val < b->best)
                b->best = val;
        }
        return;
    }
    gc_set px = P | X;
    int pu = -1, pc = -1;
    while (px) {
        int u = CTZ(px);
        px &= px - 1;
        int cnt = POP(P & b->adj[u]);
        if (cnt > pc) {
            pc = cnt;
            pu = u;
        }
    }
    gc_set cand = P & ~b->adj[pu];
    while (cand) {
        int v = CTZ(cand);
        cand &= cand - 1;
        bk_rec(b, R | BIT(v), P & b->adj[v], X & b->adj[v]);
        P &= ~BIT(v);
        X |= BIT(v);
    }
}

void gc_subset_profile(const gc_set *adj, int n, uint8_t *alpha, uint8_t *theta)
{
    uint64_t total = (uint64_t)1 << n;
    alpha[0] = 0;
    theta[0] = 0;
    bk_t b;
    b.adj = adj;
    b.theta = theta;
    for (uint64_t S = 1; S < total; S++) {
        int v = CTZ(S);
        gc_set rest = S & ~BIT(v);
        int a1 = alpha[rest];
        int a2 = 1 + alpha[rest & ~adj[v]];
        alpha[S] = (uint8_t)(a1 > a2 ? a1 : a2);
        b.S = S;
        b.best = 255;
        bk_rec(&b, BIT(v), adj[v] & S, 0);
        theta[S] = (uint8_t)(1 + b.best);
    }
}

/* ------------------------------------------------------------------ */
/* canonical labelling: individualisation-refinement with orbit pruning */

static int refine(const gc_set *adj, int n, gc_set *cells, int ncells, uint8_t *active)
{
    gc_set nc[GC_MAXN];
    uint8_t na[GC_MAXN];
    int vs[GC_MAXN], cs[GC_MAXN];
    while (ncells < n) {
        int si = -1;
        for (int i = 0; i < ncells; i++)
            if (active[i]) {
                si = i;
                break;
            }
        if (si < 0)
            break;
        active[si] = 0;
        gc_set W = cells[si];
        int m = 0;
        for (int j = 0; j < ncells; j++) {
            gc_set C = cells[j];
            if (!(C & (C - 1))) {
                nc[m] = C;
                na[m++] = active[j];
                continue;
            }
            int cnt = 0, mn = 1 << 30, mx = -1;
            gc_set t = C;
            while (t) {
                int v = CTZ(t);
                t &= t - 1;
                int k = POP(adj[v] & W);
                vs[cnt] = v;
                cs[cnt++] = k;
                if (k < mn)
                    mn = k;
                if (k > mx)
                    mx = k;
            }
            if (mn == mx) {
                nc[m] = C;
                na[m++] = active[j];
                continue;
            }
            for (int val = mn; val <= mx; val++) {
                gc_set f = 0;
                for (int i = 0; i < cnt; i++)
                    if (cs[i] == val)
                        f |= BIT(vs[i]);
                if (f) {
                    nc[m] = f;
                    na[m++] = 1;
                }
            }
        }
        memcpy(cells, nc, sizeof(gc_set) * m);
        memcpy(active, na, m);
        ncells = m;
    }
    return ncells;
}

typedef struct {
    const gc_set *adj;
    int n;
    int have_best;
    gc_set best_rows[GC_MAXN];
    int best_lab[GC_MAXN];
    int naut;
    uint8_t auts[GC_MAXAUT][GC_MAXN];
    int path[GC_MAXN];
    long leaves;
} canon_t;

static void canon_leaf(canon_t *c, const gc_set *cells)
{
    int n = c->n;
    int lab[GC_MAXN], pos[GC_MAXN];
    for (int k = 0; k < n; k++) {
        lab[k] = CTZ(cells[k]);
        pos[lab[k]] = k;
    }
    c->leaves++;
    gc_set rows[GC_MAXN];
    int cmp = c->have_best ? 0 : -1;
    for (int k = 0; k < n; k++) {
        gc_set r = 0, t = c->adj[lab[k]];
        while (t) {
            r |= BIT(pos[CTZ(t)]);
            t &= t - 1;
        }
        rows[k] = r;
        if (cmp == 0) {
            if (r < c->best_rows[k])
                cmp = -1;
            else if (r > c->best_rows[k])
                return;
        }
    }
    if (cmp < 0) {
        memcpy(c->best_rows, rows, sizeof(gc_set) * n);
        memcpy(c->best_lab, lab, sizeof(int) * n);
        c->have_best = 1;
        return;
    }
    if (c->naut < GC_MAXAUT) {
        uint8_t *g = c->auts[c->naut];
        int ident = 1;
        for (int k = 0; k < n; k++) {
            g[c->best_lab[k]] = (uint8_t)lab[k];
            if (c->best_lab[k] != lab[k])
                ident = 0;
        }
        if (!ident)
            c->naut++;
    }
}

/* Does v share an orbit with an explored vertex, under the automorphisms
 * found so far that fix the current path pointwise? */
static int orbit_hits(const canon_t *c, int depth, int v, gc_set explored)
{
    int usable[GC_MAXAUT], nu = 0;
    for (int a = 0; a < c->naut; a++) {
        int ok = 1;
        for (int i = 0; i < depth; i++)
            if (c->auts[a][c->path[i]] != c->path[i]) {
                ok = 0;
                break;
            }
        if (ok)
            usable[nu++] = a;
    }
    if (!nu)
        return 0;
    gc_set orb = BIT(v), frontier = BIT(v);
    while (frontier) {
        int x = CTZ(frontier);
        frontier &= frontier - 1;
        for (int i = 0; i < nu; i++) {
            int y = c->auts[usable[i]][x];
            if (!(orb & BIT(y))) {
                orb |= BIT(y);
                frontier |= BIT(y);
            }
        }
    }
    return (orb & explored) != 0;
}

static void canon_search(canon_t *c, const gc_set *cells, int ncells, int depth)
{
    if (ncells == c->n) {
        canon_leaf(c, cells);
        return;
    }
    int ti = 0;
    while (!(cells[ti] & (cells[ti] - 1)))
        ti++;
    gc_set T = cells[ti], explored = 0, t = T;
    gc_set ch[GC_MAXN];
    uint8_t act[GC_MAXN];
    while (t) {
        int v = CTZ(t);
        t &= t - 1;
        if (explored && orbit_hits(c, depth, v, explored))
            continue;
        explored |= BIT(v);
        int m = 0;
        for (int i = 0; i < ti; i++) {
            ch[m] = cells[i];
            act[m++] = 0;
        }
        ch[m] = BIT(v);
        act[m++] = 1;
        ch[m] = T & ~BIT(v);
        act[m++] = 0;
        for (int i = ti + 1; i < ncells; i++) {
            ch[m] = cells[i];
            act[m++] = 0;
        }
        m = refine(c->adj, c->n, ch, m, act);
        c->path[depth] = v;
        canon_search(c, ch, m, depth + 1);
    }
}

long gc_canon(const gc_set *adj, int n, const gc_set *cells_in, int ncells,
              int *lab_out, gc_set *rows_out, int *discrete_root)
{
    if (n == 0) {
        *discrete_root = 1;
        return 0;
    }
    canon_t *c = calloc(1, sizeof(canon_t));
    c->adj = adj;
    c->n = n;
    gc_set cells[GC_MAXN];
    uint8_t act[GC_MAXN];
    for (int i = 0; i < ncells; i++) {
        cells[i] = cells_in[i];
        act[i] = 1;
    }
    int m = refine(adj, n, cells, ncells, act);
    *discrete_root = (m == n);
    canon_search(c, cells, m, 0);
    memcpy(lab_out, c->best_lab, sizeof(int) * n);
    memcpy(rows_out, c->best_rows, sizeof(gc_set) * n);
    long leaves = c->leaves;
    free(c);
    return leaves;
}

/* ------------------------------------------------------------------ */
/* canonical augmentation                                              */

static int rows_cmp(const gc_set *a, const gc_set *b, int n)
{
    for (int k = 0; k < n; k++) {
        if (a[k] < b[k])
            return -1;
        if (a[k] > b[k])
            return 1;
    }
    return 0;
}

/* canonical rows of g with x individualised first */
static void pointed_form(const gc_set *g, int n, int x, gc_set *rows)
{
    gc_set cells[2];
    int lab[GC_MAXN], disc;
    cells[0] = BIT(x);
    cells[1] = full_mask(n) & ~BIT(x);
    gc_canon(g, n, cells, n > 1 ? 2 : 1, lab, rows, &disc);
}

long gc_augment(const gc_set *parent, int np, int max_omega, int max_alpha,
                gc_set *out, long cap)
{
    int n = np + 1, v = np;
    gc_set pfull = full_mask(np);
    int ptriv = 1;
    if (np > 1) {
        gc_set cells[GC_MAXN];
        uint8_t act[GC_MAXN];
        cells[0] = pfull;
        act[0] = 1;
        ptriv = refine(parent, np, cells, 1, act) == np;
    }
    gc_set pcomp[GC_MAXN];
    int pdeg[GC_MAXN];
    for (int i = 0; i < np; i++) {
        pcomp[i] = ~parent[i] & pfull & ~BIT(i);
        pdeg[i] = POP(parent[i]);
    }

    gc_set *forms = NULL;
    long nforms = 0, formcap = 0;
    long count = 0;
    gc_set child[GC_MAXN], fv[GC_MAXN], fu[GC_MAXN];
    int deg[GC_MAXN];

    for (uint64_t S = 0; S <= pfull; S++) {
        int k = POP(S);
        /* v must have maximum degree in the child */
        int reject = 0;
        for (int i = 0; i < np; i++) {
            deg[i] = pdeg[i] + (int)((S >> i) & 1);
            if (deg[i] > k) {
                reject = 1;
                break;
            }
        }
        if (reject)
            continue;
        if (max_omega) {
            if (max_omega == 2) {
                gc_set t = S;
                while (t) {
                    int u = CTZ(t);
                    t &= t - 1;
                    if (parent[u] & S) {
                        reject = 1;
                        break;
                    }
                }
            } else if (k >= max_omega - 1) {
                reject = gc_stable_max(pcomp, S, NULL) >= max_omega - 1;
            }
            if (reject)
                continue;
        }
        if (max_alpha) {
            gc_set rest = pfull & ~S;
            if (POP(rest) >= max_alpha - 1 &&
                gc_stable_max(parent, rest, NULL) >= max_alpha - 1)
                continue;
        }
        for (int i = 0; i < np; i++)
            child[i] = parent[i] | (((S >> i) & 1) ? BIT(v) : 0);
        child[v] = S;
        deg[v] = k;

        /* secondary invariant among maximum-degree vertices */
        long keyv = 0;
        gc_set M = 0;
        {
            long sd = 0, tr = 0;
            gc_set t = S;
            while (t) {
                int y = CTZ(t);
                t &= t - 1;
                sd += deg[y];
                tr += POP(child[y] & S);
            }
            keyv = (sd << 16) | tr;
        }
        M = BIT(v);
        for (int u = 0; u < np && !reject; u++) {
            if (deg[u] != k)
                continue;
            long sd = 0, tr = 0;
            gc_set t = child[u];
            while (t) {
                int y = CTZ(t);
                t &= t - 1;
                sd += deg[y];
                tr += POP(child[y] & child[u]);
            }
            long key = (sd << 16) | tr;
            if (key > keyv)
                reject = 1;
            else if (key == keyv)
                M |= BIT(u);
        }
        if (reject)
            continue;

        int need_form = !ptriv || (M & (M - 1));
        if (need_form) {
            pointed_form(child, n, v, fv);
            gc_set t = M & ~BIT(v);
            while (t) {
                int u = CTZ(t);
                t &= t - 1;
                pointed_form(child, n, u, fu);
                if (rows_cmp(fu, fv, n) < 0) {
                    reject = 1;
                    break;
                }
            }
            if (reject)
                continue;
            if (!ptriv) {
                for (long f = 0; f < nforms; f++)
                    if (rows_cmp(forms + f * n, fv, n) == 0) {
                        reject = 1;
                        break;
                    }
                if (reject)
                    continue;
                if (nforms == formcap) {
                    formcap = formcap ? 2 * formcap : 64;
                    forms = realloc(forms, sizeof(gc_set) * n * formcap);
                }
                memcpy(forms + nforms * n, fv, sizeof(gc_set) * n);
                nforms++;
            }
        }
        if (count >= cap) {
            free(forms);
            return -1;
        }
        memcpy(out + count * n, child, sizeof(gc_set) * n);
        count++;
    }
    free(forms);
    return count;
}
