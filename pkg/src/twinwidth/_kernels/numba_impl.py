"""Numba-jitted hot kernels; semantics identical to numpy_impl.

Every function mirrors its numpy twin bit for bit, including tie-breaks.
Compiled lazily on first call, cached on disk (cache=True) so repeated
test runs skip compilation.
"""

import numpy as np
from numba import njit

NONE, BLACK, RED = 0, 1, 2


@njit(cache=True)
def _merge_inplace(colors, alive, rdeg, a, b):
    n = colors.shape[0]
    merged_rdeg = 0
    for w in range(n):
        if w == a or w == b:
            continue
        ca = colors[a, w]
        cb = colors[b, w]
        cn = ca if ca == cb else np.uint8(RED)
        d = 0
        if cn == RED:
            d += 1
            merged_rdeg += 1
        if ca == RED:
            d -= 1
        if cb == RED:
            d -= 1
        rdeg[w] += d
        colors[a, w] = cn
        colors[w, a] = cn
        colors[b, w] = NONE
        colors[w, b] = NONE
    colors[a, b] = NONE
    colors[b, a] = NONE
    rdeg[a] = merged_rdeg
    rdeg[b] = 0
    alive[b] = False


def merge_step(colors, alive, rdeg, a, b):
    _merge_inplace(colors, alive, rdeg, a, b)


@njit(cache=True)
def merge_eval(colors, alive, rdeg, a, b):
    n = colors.shape[0]
    merged_rdeg = 0
    other_max = 0
    for w in range(n):
        if w == a or w == b:
            continue
        ca = colors[a, w]
        cb = colors[b, w]
        cn = ca if ca == cb else np.uint8(RED)
        d = 0
        if cn == RED:
            d += 1
            merged_rdeg += 1
        if ca == RED:
            d -= 1
        if cb == RED:
            d -= 1
        rw = rdeg[w] + d
        if rw > other_max:
            other_max = rw
    return max(merged_rdeg, other_max)


@njit(cache=True)
def _red_degrees(colors):
    n = colors.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for u in range(n):
        c = 0
        for w in range(n):
            if colors[u, w] == RED:
                c += 1
        out[u] = c
    return out


def red_degrees(colors):
    return _red_degrees(colors)


@njit(cache=True)
def _replay(colors, merges):
    n = colors.shape[0]
    m = merges.shape[0]
    alive = np.ones(n, dtype=np.bool_)
    rdeg = _red_degrees(colors)
    widths = np.zeros(m, dtype=np.int64)
    argmax = np.zeros(m, dtype=np.int64)
    for t in range(m):
        a = merges[t, 0]
        b = merges[t, 1]
        _merge_inplace(colors, alive, rdeg, a, b)
        best = np.int64(0)
        arg = np.int64(0)
        for w in range(n):
            if rdeg[w] > best:
                best = rdeg[w]
                arg = w
        widths[t] = best
        argmax[t] = arg
    return widths, argmax, alive


def replay_widths(colors, merges):
    return _replay(colors, merges)


@njit(cache=True)
def _lb1(adj):
    n = adj.shape[0]
    if n < 2:
        return 0
    best = n
    for u in range(n - 1):
        for v in range(u + 1, n):
            cnt = 0
            for w in range(n):
                if w == u or w == v:
                    continue
                if adj[u, w] != adj[v, w]:
                    cnt += 1
                    if cnt >= best:
                        break
            if cnt < best:
                best = cnt
                if best == 0:
                    return 0
    return best


def lb1_scan(adj):
    return int(_lb1(adj))


@njit(cache=True)
def _greedy(colors, alive, rdeg):
    n = colors.shape[0]
    best_a = -1
    best_b = -1
    best_w = np.int64(1) << 62
    for a in range(n):
        if not alive[a]:
            continue
        for b in range(a + 1, n):
            if not alive[b]:
                continue
            w = merge_eval(colors, alive, rdeg, a, b)
            if w < best_w:
                best_a = a
                best_b = b
                best_w = w
    return best_a, best_b, best_w


def greedy_best_pair(colors, alive, rdeg):
    a, b, w = _greedy(colors, alive, rdeg)
    if a < 0:
        return -1, -1, 0
    return int(a), int(b), int(w)
