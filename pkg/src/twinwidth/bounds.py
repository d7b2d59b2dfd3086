"""Lower bounds and recognitions: lb1, strong regularity, degeneracy, girth.

lb1(G) is the minimum over all single merges of the resulting max red
degree; any complete contraction sequence starts with some merge, so
lb1 is a lower bound for twin-width.  For a merge {u, v} in a simple
graph the quotient's max red degree equals |N(u) symdiff N(v) - {u, v}|
whenever that count is positive (every outside witness has red degree
exactly 1), so a plain pair scan over symmetric differences is exact.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import NotApplicableError, ValidationError
from .trigraph import Trigraph

LB1_CODE_CAP = 7


@dataclass(frozen=True)
class SrgParams:
    """Parameter set (n, d, lambda, mu) of a strongly regular graph."""

    n: int
    d: int
    lam: int
    mu: int

    def __post_init__(self):
        if not (0 <= self.d <= self.n - 1):
            raise ValidationError(f"need 0 <= d <= n-1, got d={self.d}, n={self.n}")
        if min(self.lam, self.mu) < 0:
            raise ValidationError("lambda and mu must be nonnegative")
        lhs = (self.n - self.d - 1) * self.mu
        rhs = self.d * (self.d - self.lam - 1)
        if lhs != rhs:
            raise ValidationError(
                f"srg identity violated: (n-d-1)*mu = {lhs} but d*(d-lambda-1) = {rhs}"
            )

    def as_tuple(self):
        return (self.n, self.d, self.lam, self.mu)


@dataclass(frozen=True)
class EliminationOrder:
    """Vertex order in which every vertex has at most d earlier neighbors."""

    order: tuple
    d: int


def lb1(G: Trigraph) -> int:
    """One-merge lower bound for twin-width of a red-free trigraph."""
    if not G.is_simple():
        raise ValidationError("lb1 is defined for graphs; input has red edges")
    if G.n <= 1:
        return 0
    return int(_kernels.lb1_scan(G.adjacency()))


def lb1_over_codes(n: int, codes=None) -> np.ndarray:
    """Vectorized lb1 for labeled graphs given as edge-bitmask codes.

    Bit k of a code is the edge pair list(combinations(range(n), 2))[k].
    With codes=None all 2^C(n,2) labeled graphs are scanned at once; this
    is the batch route for the exhaustive small-n sweeps and is
    cross-checked against lb1 on samples in the tests.  Capped at n <= 7.
    """
    if n > LB1_CODE_CAP:
        raise ValidationError(f"exhaustive code scan capped at n <= {LB1_CODE_CAP}")
    pairs = list(combinations(range(n), 2))
    if codes is None:
        codes = np.arange(1 << len(pairs), dtype=np.uint32)
    else:
        codes = np.asarray(codes, dtype=np.uint32)
    if n <= 1:
        return np.zeros(len(codes), dtype=np.int16)
    bit = {}
    for k, (u, v) in enumerate(pairs):
        bit[(u, v)] = k
        bit[(v, u)] = k
    best = np.full(len(codes), n, dtype=np.int16)
    for u, v in pairs:
        cnt = np.zeros(len(codes), dtype=np.int16)
        for w in range(n):
            if w == u or w == v:
                continue
            xu = (codes >> bit[(u, w)]) & 1
            xv = (codes >> bit[(v, w)]) & 1
            cnt += (xu ^ xv).astype(np.int16)
        np.minimum(best, cnt, out=best)
    return best


def graph_from_code(n: int, code: int) -> Trigraph:
    """Labeled graph for an edge-bitmask code (same bit order as above)."""
    pairs = list(combinations(range(n), 2))
    edges = [pairs[k] for k in range(len(pairs)) if (code >> k) & 1]
    return Trigraph.from_edges(n, edges)


def srg_detect(G: Trigraph):
    """Parameters (n, d, lambda, mu) if G is strongly regular, else None.

    Raises NotApplicableError when the question does not make sense:
    red edges, fewer than 3 vertices, or a complete/empty graph (where one
    of lambda, mu has no witness pair).
    """
    if not G.is_simple():
        raise NotApplicableError("srg detection needs a red-free trigraph")
    n = G.n
    if n < 3:
        raise NotApplicableError(f"srg detection needs n >= 3, got {n}")
    m = G.edge_count()
    if m == 0 or m == n * (n - 1) // 2:
        raise NotApplicableError("srg detection is not applicable to complete or empty graphs")
    degs = G.degrees()
    if degs.min() != degs.max():
        return None
    d = int(degs[0])
    A = G.adjacency().astype(np.int32)
    common = A @ A
    adj = A.astype(bool)
    off = ~np.eye(n, dtype=bool)
    lams = np.unique(common[adj])
    mus = np.unique(common[off & ~adj])
    if len(lams) != 1 or len(mus) != 1:
        return None
    return SrgParams(n=n, d=d, lam=int(lams[0]), mu=int(mus[0]))


def srg_lb1(p: SrgParams) -> int:
    """Closed-form lb1 of a strongly regular graph: min(2(d-lambda-1), 2(d-mu)).

    Merging an adjacent pair creates 2(d-lambda-1) red witnesses, a
    non-adjacent pair 2(d-mu); the parameters determine both exactly.
    """
    return min(2 * (p.d - p.lam - 1), 2 * (p.d - p.mu))


def is_conference(p: SrgParams) -> bool:
    """True iff the parameters match (n, (n-1)/2, (n-5)/4, (n-1)/4) exactly."""
    n = p.n
    return (
        (n - 1) % 2 == 0
        and (n - 5) % 4 == 0
        and (n - 1) % 4 == 0
        and p.d == (n - 1) // 2
        and p.lam == (n - 5) // 4
        and p.mu == (n - 1) // 4
    )


def degeneracy(G: Trigraph) -> EliminationOrder:
    """Minimum d with a witnessing d-elimination order, by min-degree peeling.

    Repeatedly removes the minimum-degree vertex (smallest id on ties); the
    emitted order lists vertices in reverse removal order, so every vertex
    has at most d neighbors to its left.
    """
    if not G.is_simple():
        raise ValidationError("degeneracy is defined for graphs; input has red edges")
    n = G.n
    if n == 0:
        return EliminationOrder(order=(), d=0)
    deg = [G.deg(v) for v in range(n)]
    adj = [G.neighbors(v).tolist() for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    removal = []
    d = 0
    while heap:
        dv, u = heapq.heappop(heap)
        if removed[u] or dv != deg[u]:
            continue
        d = max(d, dv)
        removed[u] = True
        removal.append(u)
        for w in adj[u]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return EliminationOrder(order=tuple(reversed(removal)), d=d)


def girth(G: Trigraph):
    """Length of the shortest cycle via per-vertex BFS; math.inf for forests."""
    if not G.is_simple():
        raise ValidationError("girth is defined for graphs; input has red edges")
    n = G.n
    best = math.inf
    adj = [G.neighbors(v).tolist() for v in range(n)]
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
