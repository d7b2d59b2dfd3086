"""Trigraphs, partitions, merge steps, and the contraction-width checker.

A trigraph is a graph whose edges are colored black or red.  Contracting
two blocks U, W of a vertex partition yields a quotient where a pair of
blocks is black iff fully connected by black edges, absent iff no edge at
all runs between them, and red otherwise.  The width of a sequence of such
merges is the maximum red degree over the starting trigraph and every
quotient along the way; twin-width is the minimum width over all complete
sequences.  Everything else in this package produces or consumes the
objects defined here.

Vertices are integers 0..n-1.  Edge colors are stored in a symmetric
(n, n) uint8 matrix: 0 no edge, 1 black, 2 red.  Blocks of a partition are
always addressed by their minimum member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ReplayError, ValidationError

NONE, BLACK, RED = 0, 1, 2

#: Type alias; vertex ids are plain integers in [0, n).
VertexId = int


class Trigraph:
    """Immutable edge-colored graph on vertices 0..n-1."""

    __slots__ = ("n", "_colors", "_adj_cache")

    def __init__(self, n: int, colors: np.ndarray | None = None, _trusted=False):
        if n < 0:
            raise ValidationError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        if colors is None:
            colors = np.zeros((n, n), dtype=np.uint8)
        elif not _trusted:
            colors = np.array(colors, dtype=np.uint8, copy=True)
            if colors.shape != (n, n):
                raise ValidationError(f"color matrix must be {n}x{n}")
            if np.any(np.diag(colors) != NONE):
                raise ValidationError("self-loops are not allowed")
            if not np.array_equal(colors, colors.T):
                raise ValidationError("color matrix must be symmetric")
            if np.any(colors > RED):
                raise ValidationError("edge colors must be 0 (none), 1 (black) or 2 (red)")
        colors.setflags(write=False)
        self._colors = colors
        self._adj_cache = None

    @classmethod
    def from_edges(cls, n, edges):
        """Build from (u, v) pairs (black) or (u, v, color) triples."""
        colors = np.zeros((n, n), dtype=np.uint8)
        for e in edges:
            if len(e) == 2:
                u, v = e
                c = BLACK
            else:
                u, v, c = e
                if isinstance(c, str):
                    c = BLACK if c in ("b", "black") else RED if c in ("r", "red") else -1
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if c not in (BLACK, RED):
                raise ValidationError(f"bad edge color {c!r} on ({u},{v})")
            colors[u, v] = c
            colors[v, u] = c
        g = cls(n, colors, _trusted=True)
        return g

    @property
    def colors(self) -> np.ndarray:
        """Read-only (n, n) uint8 color matrix."""
        return self._colors

    def color(self, u, v) -> int:
        return int(self._colors[u, v])

    def has_edge(self, u, v) -> bool:
        return self._colors[u, v] != NONE

    def neighbors(self, v) -> np.ndarray:
        """Sorted array of all neighbors of v (black or red)."""
        if self._adj_cache is None:
            self._adj_cache = [None] * self.n
        cached = self._adj_cache[v]
        if cached is None:
            cached = np.flatnonzero(self._colors[v])
            self._adj_cache[v] = cached
        return cached

    def red_neighbors(self, v) -> np.ndarray:
        return np.flatnonzero(self._colors[v] == RED)

    def deg(self, v) -> int:
        return int((self._colors[v] != NONE).sum())

    def rdeg(self, v) -> int:
        return int((self._colors[v] == RED).sum())

    def degrees(self) -> np.ndarray:
        return (self._colors != NONE).sum(axis=1).astype(np.int64)

    def red_degrees(self) -> np.ndarray:
        return (self._colors == RED).sum(axis=1).astype(np.int64)

    def max_degree(self) -> int:
        """Delta(G): maximum degree counting both colors."""
        return int(self.degrees().max()) if self.n else 0

    def max_red_degree(self) -> int:
        """Delta_red(G)."""
        return int(self.red_degrees().max()) if self.n else 0

    def edge_count(self) -> int:
        return int((self._colors != NONE).sum()) // 2

    def red_edge_count(self) -> int:
        return int((self._colors == RED).sum()) // 2

    def edges(self):
        """Iterate (u, v, color) with u < v, sorted lexicographically."""
        iu, iv = np.nonzero(np.triu(self._colors, 1))
        for u, v in zip(iu.tolist(), iv.tolist()):
            yield u, v, int(self._colors[u, v])

    def is_simple(self) -> bool:
        """True when there are no red edges."""
        return not np.any(self._colors == RED)

    def underlying(self) -> "Trigraph":
        """Underlying simple graph: every edge recolored black."""
        c = np.where(self._colors != NONE, np.uint8(BLACK), np.uint8(NONE))
        return Trigraph(self.n, c, _trusted=True)

    def adjacency(self) -> np.ndarray:
        """uint8 0/1 adjacency of the underlying simple graph."""
        return (self._colors != NONE).astype(np.uint8)

    def relabeled(self, perm) -> "Trigraph":
        """Image under a vertex bijection given as an index array."""
        p = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        c = self._colors[np.ix_(inv, inv)]
        return Trigraph(self.n, np.ascontiguousarray(c), _trusted=True)

    def __eq__(self, other):
        return (
            isinstance(other, Trigraph)
            and self.n == other.n
            and np.array_equal(self._colors, other._colors)
        )

    def __hash__(self):
        return hash((self.n, self._colors.tobytes()))

    def __repr__(self):
        return f"Trigraph(n={self.n}, m={self.edge_count()}, red={self.red_edge_count()})"


class Partition:
    """Partition of [0, n) into nonempty blocks, each addressed by its minimum."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        seen = np.zeros(n, dtype=bool)
        norm = []
        for block in blocks:
            b = sorted(set(block))
            if not b:
                raise ValidationError("empty block in partition")
            for v in b:
                if not (0 <= v < n):
                    raise ValidationError(f"vertex {v} out of range for n={n}")
                if seen[v]:
                    raise ValidationError(f"vertex {v} appears in two blocks")
                seen[v] = True
            norm.append(tuple(b))
        if not seen.all():
            missing = int(np.flatnonzero(~seen)[0])
            raise ValidationError(f"partition does not cover vertex {missing}")
        norm.sort(key=lambda b: b[0])
        self.n = n
        self.blocks = tuple(norm)

    @classmethod
    def discrete(cls, n):
        return cls(n, [[v] for v in range(n)])

    @classmethod
    def trivial(cls, n):
        return cls(n, [list(range(n))])

    def representatives(self):
        """Minimum member of each block, in block order."""
        return [b[0] for b in self.blocks]

    def block_of(self, v):
        for b in self.blocks:
            if v in b:
                return b
        raise ValidationError(f"vertex {v} not in partition")

    def refines(self, other: "Partition") -> bool:
        """True when every block here is contained in a block of other."""
        if self.n != other.n:
            return False
        owner = {}
        for i, b in enumerate(other.blocks):
            for v in b:
                owner[v] = i
        return all(len({owner[v] for v in b}) == 1 for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"Partition(n={self.n}, blocks={len(self.blocks)})"


@dataclass(frozen=True)
class MergeStep:
    """One contraction: merge the block containing u with the block containing v.

    Either member may name its block; emitted files always carry the block
    minima.  u < v is required.
    """

    u: int
    v: int

    def __post_init__(self):
        if not (0 <= self.u < self.v):
            raise ValidationError(f"merge step needs 0 <= u < v, got ({self.u}, {self.v})")


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered merge steps over original vertex ids; length n-1 means complete."""

    n: int
    steps: tuple

    def __post_init__(self):
        if len(self.steps) > max(self.n - 1, 0):
            raise ValidationError(
                f"sequence of {len(self.steps)} steps too long for n={self.n}"
            )
        for s in self.steps:
            if s.v >= self.n:
                raise ValidationError(f"step ({s.u},{s.v}) out of range for n={self.n}")

    @property
    def complete(self) -> bool:
        return len(self.steps) == self.n - 1 or self.n <= 1

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class WidthReport:
    """Result of replaying a sequence: its width and where it is attained."""

    width: int
    per_step: tuple  # (step index, max red degree after that step)
    argmax_block: int  # representative of a block attaining the width


def quotient(G: Trigraph, P: Partition) -> Trigraph:
    """Quotient trigraph G/P on |P| vertices.

    Blocks are sorted by minimum member and densely renumbered.  Two blocks
    are black iff fully connected by black edges, absent iff disconnected,
    red otherwise.  Computed straight from the definition via block-pair
    edge counts, independently of the incremental machinery.
    """
    if P.n != G.n:
        raise ValidationError(f"partition of {P.n} vertices does not fit n={G.n}")
    k = len(P.blocks)
    member = np.zeros((k, G.n), dtype=np.float32)
    sizes = np.zeros(k, dtype=np.int64)
    for i, b in enumerate(P.blocks):
        member[i, list(b)] = 1.0
        sizes[i] = len(b)
    black = (G.colors == BLACK).astype(np.float32)
    any_edge = (G.colors != NONE).astype(np.float32)
    nblack = np.rint(member @ black @ member.T).astype(np.int64)
    nany = np.rint(member @ any_edge @ member.T).astype(np.int64)
    pairs = np.outer(sizes, sizes)
    out = np.full((k, k), RED, dtype=np.uint8)
    out[nblack == pairs] = BLACK
    out[nany == 0] = NONE
    np.fill_diagonal(out, NONE)
    return Trigraph(k, out, _trusted=True)


class QuotientState:
    """Incremental quotient of (G, P) under successive merges.

    Single-owner mutable: one replay per instance.  After every merge the
    state's edge map equals quotient(G, current partition) recomputed from
    scratch; only the merged block and its neighborhood are touched.
    """

    def __init__(self, G: Trigraph, P: Partition | None = None):
        self.G = G
        n = G.n
        self._parent = list(range(n))
        if P is None:
            colors = np.array(G.colors, dtype=np.uint8, copy=True)
            alive = np.ones(n, dtype=bool)
        else:
            q = quotient(G, P)
            reps = P.representatives()
            colors = np.zeros((n, n), dtype=np.uint8)
            idx = np.array(reps, dtype=np.int64)
            colors[np.ix_(idx, idx)] = q.colors
            alive = np.zeros(n, dtype=bool)
            alive[idx] = True
            for b in P.blocks:
                r = b[0]
                for v in b[1:]:
                    self._parent[v] = r
        self.colors = colors
        self.alive = alive
        self.rdeg = _kernels.red_degrees(colors)
        self.steps_applied = 0

    def find(self, v) -> int:
        """Representative (minimum member) of the block containing v."""
        p = self._parent
        root = v
        while p[root] != root:
            root = p[root]
        while p[v] != root:
            p[v], v = root, p[v]
        return root

    def block_count(self) -> int:
        return int(self.alive.sum())

    def max_red_degree(self) -> int:
        return int(self.rdeg.max()) if self.G.n else 0

    def merge(self, u, v) -> None:
        """Merge the blocks containing u and v (any members may name them)."""
        if not (0 <= u < self.G.n and 0 <= v < self.G.n):
            raise ReplayError(
                f"step {self.steps_applied}: vertex out of range in merge ({u},{v})",
                step_index=self.steps_applied,
            )
        a, b = self.find(u), self.find(v)
        if a == b:
            raise ReplayError(
                f"step {self.steps_applied}: both endpoints lie in block {a}",
                step_index=self.steps_applied,
            )
        if a > b:
            a, b = b, a
        _kernels.merge_step(self.colors, self.alive, self.rdeg, a, b)
        self._parent[b] = a
        self.steps_applied += 1

    def current_partition(self) -> Partition:
        groups = {}
        for v in range(self.G.n):
            groups.setdefault(self.find(v), []).append(v)
        return Partition(self.G.n, list(groups.values()))

    def current_trigraph(self) -> Trigraph:
        """Quotient on alive blocks, densely renumbered by representative."""
        idx = np.flatnonzero(self.alive)
        sub = np.ascontiguousarray(self.colors[np.ix_(idx, idx)])
        return Trigraph(len(idx), sub, _trusted=True)


def apply_merge(state: QuotientState, step: MergeStep) -> QuotientState:
    """Apply one merge step to an incremental quotient state (in place)."""
    state.merge(step.u, step.v)
    return state


def _resolve_steps(n, steps):
    """Union-find pass turning member-named steps into (survivor, dying) rep
    pairs; raises ReplayError naming the first bad step."""
    parent = list(range(n))

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    resolved = np.zeros((len(steps), 2), dtype=np.int64)
    for t, s in enumerate(steps):
        if s.v >= n:
            raise ReplayError(f"step {t}: vertex {s.v} out of range", step_index=t)
        a, b = find(s.u), find(s.v)
        if a == b:
            raise ReplayError(f"step {t}: both endpoints lie in block {a}", step_index=t)
        if a > b:
            a, b = b, a
        resolved[t, 0] = a
        resolved[t, 1] = b
        parent[b] = a
    return resolved


def sequence_width(G: Trigraph, seq: ContractionSequence, _return_state=False):
    """Replay seq on G and report the width of the (possibly partial) sequence.

    The width includes the starting trigraph's max red degree, which only
    matters for inputs that already carry red edges.
    """
    if seq.n != G.n:
        raise ValidationError(f"sequence on {seq.n} vertices does not fit n={G.n}")
    resolved = _resolve_steps(G.n, seq.steps)
    colors = np.array(G.colors, dtype=np.uint8, copy=True)
    init_rdeg = _kernels.red_degrees(colors)
    init_width = int(init_rdeg.max()) if G.n else 0
    init_arg = int(init_rdeg.argmax()) if G.n else 0
    widths, argmax, alive = _kernels.replay_widths(colors, resolved)
    width, arg = init_width, init_arg
    for t in range(len(seq.steps)):
        if widths[t] > width:
            width = int(widths[t])
            arg = int(argmax[t])
    report = WidthReport(
        width=width,
        per_step=tuple((t, int(widths[t])) for t in range(len(seq.steps))),
        argmax_block=arg,
    )
    if _return_state:
        return report, colors, alive
    return report


def complement(G: Trigraph) -> Trigraph:
    """Complement of a red-free trigraph: black edges and non-edges swap."""
    if not G.is_simple():
        raise ValidationError("complement is only defined for red-free trigraphs")
    c = np.where(G.colors == NONE, np.uint8(BLACK), np.uint8(NONE))
    np.fill_diagonal(c, NONE)
    return Trigraph(G.n, c, _trusted=True)


def redden(G: Trigraph) -> Trigraph:
    """Recolor every edge red; vertex set unchanged."""
    c = np.where(G.colors != NONE, np.uint8(RED), np.uint8(NONE))
    return Trigraph(G.n, c, _trusted=True)


def path_graph(n: int) -> Trigraph:
    """Path 0-1-...-(n-1); small convenience used all over the tests."""
    return Trigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Trigraph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ValidationError("cycles need at least 3 vertices")
    return Trigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Trigraph:
    return Trigraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


INFINITY = math.inf
