"""Pure-numpy implementations of the hot kernels.

Semantics reference for the numba backend: both backends must be
observationally identical (same widths, same tie-breaks, same argmax
blocks).  Select with TWINWIDTH_KERNELS=numpy.

Conventions shared by every kernel:
  * colors is a symmetric (n, n) uint8 matrix, 0 = no edge, 1 = black,
    2 = red, zero diagonal.  Rows/columns of merged-away (dead) blocks
    are kept all-zero, so vectorized row operations need no masking.
  * a merge (a, b) requires a < b and both alive; block a survives.
    Since blocks are always represented by their minimum member, the
    surviving index is the minimum of the merged block.
"""

import numpy as np

NONE, BLACK, RED = 0, 1, 2


def merge_step(colors, alive, rdeg, a, b):
    """Merge block b into block a in place; returns nothing.

    Combination rule per pair of blocks: black + black -> black,
    none + none -> none, anything else -> red.
    """
    row_a = colors[a]
    row_b = colors[b]
    new_row = np.where(row_a == row_b, row_a, np.uint8(RED))
    new_row[a] = NONE
    new_row[b] = NONE
    rdeg += (new_row == RED).astype(np.int64)
    rdeg -= (row_a == RED).astype(np.int64)
    rdeg -= (row_b == RED).astype(np.int64)
    colors[a, :] = new_row
    colors[:, a] = new_row
    colors[b, :] = NONE
    colors[:, b] = NONE
    rdeg[a] = int((new_row == RED).sum())
    rdeg[b] = 0
    alive[b] = False


def merge_eval(colors, alive, rdeg, a, b):
    """Max red degree of the quotient after merging (a, b); no mutation."""
    row_a = colors[a]
    row_b = colors[b]
    new_row = np.where(row_a == row_b, row_a, np.uint8(RED))
    new_row[a] = NONE
    new_row[b] = NONE
    is_red = new_row == RED
    merged_rdeg = int(is_red.sum())
    delta = is_red.astype(np.int64) - (row_a == RED) - (row_b == RED)
    others = rdeg + delta
    others[a] = 0
    others[b] = 0
    other_max = int(others.max()) if others.size else 0
    return max(merged_rdeg, other_max)


def red_degrees(colors):
    """Red degree of every index (dead rows are all-zero, so they get 0)."""
    return (colors == RED).sum(axis=1).astype(np.int64)


def replay_widths(colors, merges):
    """Replay a resolved merge list and record per-step max red degrees.

    colors is mutated in place.  merges is an (m, 2) int64 array of
    (surviving, dying) indices, already resolved to current block
    representatives with merges[t, 0] < merges[t, 1].

    Returns (widths, argmax) where widths[t] is the max red degree after
    step t and argmax[t] the smallest index attaining it.
    """
    n = colors.shape[0]
    m = merges.shape[0]
    alive = np.ones(n, dtype=bool)
    rdeg = red_degrees(colors)
    widths = np.zeros(m, dtype=np.int64)
    argmax = np.zeros(m, dtype=np.int64)
    for t in range(m):
        a, b = int(merges[t, 0]), int(merges[t, 1])
        merge_step(colors, alive, rdeg, a, b)
        widths[t] = int(rdeg.max()) if n else 0
        argmax[t] = int(rdeg.argmax()) if n else 0
    return widths, argmax, alive


def lb1_scan(adj):
    """min over vertex pairs {u, v} of |N(u) symdiff N(v) minus {u, v}|.

    adj is an (n, n) uint8 0/1 adjacency matrix of a simple graph.
    For a single merge in a simple graph this count equals the max red
    degree of the resulting quotient whenever it is positive, and the
    quotient is red-free when it is zero, so the minimum over pairs is
    the one-merge lower bound.
    """
    n = adj.shape[0]
    if n < 2:
        return 0
    best = n
    for u in range(n - 1):
        diffs = adj[u + 1:] != adj[u]
        counts = diffs.sum(axis=1) - 2 * adj[u, u + 1:]
        m = int(counts.min())
        if m < best:
            best = m
            if best == 0:
                return 0
    return best


def greedy_best_pair(colors, alive, rdeg):
    """Alive pair whose merge minimizes the resulting max red degree.

    Ties broken by lexicographically smallest (a, b).  Returns
    (a, b, resulting_width); (-1, -1, 0) when fewer than two blocks.
    """
    idx = np.flatnonzero(alive)
    if idx.size < 2:
        return -1, -1, 0
    best_a, best_b, best_w = -1, -1, np.iinfo(np.int64).max
    for i in range(idx.size - 1):
        a = int(idx[i])
        for j in range(i + 1, idx.size):
            b = int(idx[j])
            w = merge_eval(colors, alive, rdeg, a, b)
            if w < best_w:
                best_a, best_b, best_w = a, b, w
    return best_a, best_b, int(best_w)
