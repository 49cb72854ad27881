#ifndef GAPCORE_H
#define GAPCORE_H

#include <stdint.h>

#define GC_MAXN 64
#define GC_MAXAUT 64

typedef uint64_t gc_set;

/* Maximum stable set inside `cand`; returns its size, witness in *out.
 * The witness is the lexicographically least optimal set. */
int gc_stable_max(const gc_set *adj, gc_set cand, gc_set *out);

/* Exact chromatic number of the graph on vertices 0..n-1; colors[v] filled. */
int gc_color_exact(const gc_set *adj, int n, int *colors);

/* alpha and theta for every subset of 0..n-1 (tables of length 2^n). */
void gc_subset_profile(const gc_set *adj, int n, uint8_t *alpha, uint8_t *theta);

/* Canonical labelling under an ordered initial partition.
 * cells: ncells masks partitioning 0..n-1 (order matters).
 * lab_out[k] = vertex placed at position k; rows_out[k] = canonical row k.
 * Returns the number of leaves visited; *discrete_root is set when the
 * refined initial partition is already discrete. */
long gc_canon(const gc_set *adj, int n, const gc_set *cells, int ncells,
              int *lab_out, gc_set *rows_out, int *discrete_root);

/* Canonical-augmentation children of one parent graph on np vertices.
 * max_omega / max_alpha: hereditary limits (0 = no limit); the child must
 * satisfy omega < max_omega and alpha < max_alpha.
 * Accepted children rows (np+1 words each) go to out; returns the count,
 * or -1 when cap is exceeded. */
long gc_augment(const gc_set *parent, int np, int max_omega, int max_alpha,
                gc_set *out, long cap);

#endif
