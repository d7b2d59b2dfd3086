"""Constructive contraction schemes emitting replay-checked certificates.

Each scheme turns a structural argument into an explicit (possibly
partial) contraction sequence together with the bound the argument
promises; the sequence is then replayed through the width checker and the
realized width is recorded next to the claim.  A certificate is evidence,
not trust: verified_width comes from the replay, never from the claim.

Merge ordering conventions (fixed for reproducibility; the underlying
arguments are insensitive to the order of consecutive-pair merges):
orbits are processed in increasing minimum-representative order with
blocks left to right; interval completions take right-most pairs first;
pairing completions merge remaining blocks in increasing representative
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bounds import EliminationOrder
from .errors import ValidationError
from .families import (
    AbelianGroupSpec,
    ConnectionSet,
    cayley_abelian,
    cyclic_latin,
    johnson,
    latin_square_graph,
    two_subsets,
)
from .perms import Permutation
from .solver import nontrivial_automorphism
from .trigraph import (
    ContractionSequence,
    MergeStep,
    QuotientState,
    Trigraph,
    WidthReport,
    sequence_width,
)


@dataclass(frozen=True)
class CyclicTower:
    """Stages of vertex permutations, each acting on the quotient left by the
    previous stages (expressed on original ids, constant on earlier blocks)."""

    perms: tuple

    def __init__(self, perms):
        object.__setattr__(self, "perms", tuple(perms))


@dataclass(frozen=True)
class SchemeCertificate:
    seq: ContractionSequence
    claimed_bound: int
    verified_width: int
    residual: Trigraph
    report: WidthReport
    inconclusive: bool = False

    @property
    def complete(self) -> bool:
        return self.seq.complete


class _Emitter:
    """Collects merge steps; blocks may be named by any member, steps are
    recorded as the block minima at merge time."""

    def __init__(self, n):
        self.n = n
        self.parent = list(range(n))
        self.steps = []

    def find(self, v):
        p = self.parent
        root = v
        while p[root] != root:
            root = p[root]
        while p[v] != root:
            p[v], v = root, p[v]
        return root

    def merge(self, x, y):
        a, b = self.find(x), self.find(y)
        if a == b:
            raise ValidationError(f"merge of block {a} with itself")
        if a > b:
            a, b = b, a
        self.steps.append(MergeStep(a, b))
        self.parent[b] = a
        return a

    def representatives(self):
        return sorted({self.find(v) for v in range(self.n)})


def _certify(G, steps, claimed, inconclusive=False):
    seq = ContractionSequence(G.n, tuple(steps))
    report, colors, alive = sequence_width(G, seq, _return_state=True)
    idx = np.flatnonzero(alive)
    residual = Trigraph(
        len(idx), np.ascontiguousarray(colors[np.ix_(idx, idx)]), _trusted=True
    )
    return SchemeCertificate(
        seq=seq,
        claimed_bound=claimed,
        verified_width=report.width,
        residual=residual,
        report=report,
        inconclusive=inconclusive,
    )


def _check_automorphism(G, phi):
    bad = phi.violated_edge(G)
    if bad is not None:
        raise ValidationError(f"not an automorphism: edge {bad} is not preserved")


def _doubling_steps(orbits):
    """Member pairs realizing the block-doubling passes over the given orbits.

    Each orbit is listed in cyclic order starting at its minimum.  Stage k
    merges the consecutive size-k blocks pairwise, passing from the
    partition into k-blocks to the one into 2k-blocks, for k = 1, 2, 4, ...
    until every orbit is a single block.
    """
    steps = []
    if not orbits:
        return steps
    omax = max(len(o) for o in orbits)
    k = 1
    while k < omax:
        for orbit in orbits:
            o = len(orbit)
            q = 0
            while 2 * q * k + k < o:
                steps.append((orbit[2 * q * k], orbit[2 * q * k + k]))
                q += 1
        k *= 2
    return steps


def _orbit_lists(phi):
    """Cycles of phi sorted by minimum element, each starting at its minimum."""
    return sorted(phi.cycles(), key=lambda c: c[0])


def orbit_double(G: Trigraph, phi: Permutation) -> SchemeCertificate:
    """Contract G to G/<phi> by doubling consecutive blocks along each orbit.

    Every intermediate quotient keeps maximum degree at most 4*Delta(G),
    hence the claimed bound; the residual has one vertex per orbit.
    """
    if phi.n != G.n:
        raise ValidationError(f"permutation on {phi.n} points does not fit n={G.n}")
    _check_automorphism(G, phi)
    emitter = _Emitter(G.n)
    for a, b in _doubling_steps(_orbit_lists(phi)):
        emitter.merge(a, b)
    return _certify(G, emitter.steps, 4 * G.max_degree())


def circulant_scheme(G: Trigraph, phi: Permutation) -> SchemeCertificate:
    """Complete sequence for a circulant graph via single-orbit doubling.

    With one orbit there is at most one short block per stage, which
    tightens the doubling bound to 3*Delta(G) + 1.
    """
    if phi.n != G.n:
        raise ValidationError(f"permutation on {phi.n} points does not fit n={G.n}")
    _check_automorphism(G, phi)
    orbits = _orbit_lists(phi)
    if len(orbits) != 1:
        raise ValidationError(f"circulant scheme needs a single orbit, got {len(orbits)}")
    emitter = _Emitter(G.n)
    for a, b in _doubling_steps(orbits):
        emitter.merge(a, b)
    return _certify(G, emitter.steps, 3 * G.max_degree() + 1)


def _induced_block_permutation(state, reps, phi, stage):
    """Push phi down to the current quotient; error if it is not blockwise."""
    image_rep = {}
    for v in range(state.G.n):
        b = state.find(v)
        t = state.find(phi(v))
        if image_rep.setdefault(b, t) != t:
            raise ValidationError(
                f"tower stage {stage}: permutation does not map blocks to blocks"
            )
    dense = {r: i for i, r in enumerate(reps)}
    return Permutation(tuple(dense[image_rep[r]] for r in reps))


def cyclic_tower(G: Trigraph, tower: CyclicTower) -> SchemeCertificate:
    """Chain orbit-doubling runs, one per tower stage, each on the quotient
    produced so far; realizes the contraction to the joint quotient."""
    emitter = _Emitter(G.n)
    state = QuotientState(G)
    for stage, phi in enumerate(tower.perms, start=1):
        if phi.n != G.n:
            raise ValidationError(
                f"tower stage {stage}: permutation on {phi.n} points does not fit n={G.n}"
            )
        reps = sorted(r for r in emitter.representatives())
        H = state.current_trigraph()
        psi = _induced_block_permutation(state, reps, phi, stage)
        bad = psi.violated_edge(H.underlying())
        if bad is not None:
            raise ValidationError(
                f"tower stage {stage}: induced map breaks quotient edge {bad}"
            )
        for i, j in _doubling_steps(_orbit_lists(psi)):
            emitter.merge(reps[i], reps[j])
            state.merge(reps[i], reps[j])
    return _certify(G, emitter.steps, 4 * G.max_degree())


def degenerate_scheme(G: Trigraph, elim: EliminationOrder) -> SchemeCertificate:
    """Interval scheme for d-degenerate graphs, width at most d*(k+1) with
    k = ceil(sqrt(2n/d)), which is at most sqrt(2dn) + 2d.

    Positions along the elimination order are grouped into intervals of
    sizes 1,...,1, 2,...,2, ... (d of each size); intervals are contracted
    right-most first, merging their two right-most blocks, and the final
    interval blocks are merged right-most pair first.
    """
    n = G.n
    order = list(elim.order)
    if sorted(order) != list(range(n)):
        raise ValidationError("elimination order is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    for v in range(n):
        left = sum(1 for w in G.neighbors(v) if pos[int(w)] < pos[v])
        if left > elim.d:
            raise ValidationError(
                f"vertex {v} has {left} left-neighbors, exceeding d={elim.d}"
            )
    if n <= 1:
        return _certify(G, [], 0)
    d = max(elim.d, 1)
    k = math.ceil(math.sqrt(2 * n / d))
    intervals = []
    taken = 0
    i = 1
    while taken < n:
        size = min(math.ceil(i / d), n - taken)
        intervals.append(list(range(taken, taken + size)))
        taken += size
        i += 1
    emitter = _Emitter(n)
    for interval in reversed(intervals):
        for j in range(len(interval) - 1, 0, -1):
            emitter.merge(order[interval[j - 1]], order[interval[j]])
    for t in range(len(intervals) - 2, -1, -1):
        emitter.merge(order[intervals[t][0]], order[intervals[t + 1][0]])
    return _certify(G, emitter.steps, d * (k + 1))


def johnson_scheme(n: int) -> SchemeCertificate:
    """Complete sequence for J(n,2) of width max(0, 2(n-3)).

    Peels one ground element per round: for m = n down to 3, the blocks
    playing {i,m} and {i,m-1} are merged for i = 1..m-2, then the block
    playing {m-1,m} joins the merged {m-2,.} block, leaving a relabeled
    copy of the graph one element smaller.
    """
    if n < 2:
        raise ValidationError(f"johnson scheme needs n >= 2, got {n}")
    G = johnson(n)
    vid = {pair: i for i, pair in enumerate(two_subsets(n))}
    bm = dict(vid)  # pair of ground elements -> a member of the block playing it
    emitter = _Emitter(G.n)
    for m in range(n, 2, -1):
        for i in range(1, m - 1):
            emitter.merge(bm[(i, m)], bm[(i, m - 1)])
            del bm[(i, m)]
        emitter.merge(bm[(m - 1, m)], bm[(m - 2, m - 1)])
        del bm[(m - 1, m)]
    return _certify(G, emitter.steps, max(0, 2 * (n - 3)))


def selfcomp_pairs(grp: AbelianGroupSpec, S: ConnectionSet) -> SchemeCertificate:
    """Inverse pairing for odd-order abelian Cayley graphs.

    Merges {x, -x} for every nonzero x in increasing representative order,
    then folds the remaining blocks together in increasing representative
    order.  On a self-complementary edge- and vertex-transitive graph this
    realizes width (n-1)/2, matching the one-merge lower bound.
    """
    if grp.order % 2 == 0:
        raise ValidationError("inverse pairing needs odd group order")
    G = cayley_abelian(grp, S)
    emitter = _Emitter(G.n)
    for x in range(1, grp.order):
        y = grp.neg(x)
        if x < y:
            emitter.merge(x, y)
    reps = emitter.representatives()
    for r in reps[1:]:
        emitter.merge(reps[0], r)
    return _certify(G, emitter.steps, (grp.order - 1) // 2)


def _twin_first_steps(G):
    """Zero-width sequence by repeatedly merging a twin pair (smallest first);
    only valid on graphs every quotient of which still contains twins."""
    colors = np.array(G.colors, dtype=np.uint8, copy=True)
    alive = np.ones(G.n, dtype=bool)
    rdeg = _kernels.red_degrees(colors)
    steps = []
    for _ in range(max(G.n - 1, 0)):
        live = np.flatnonzero(alive)
        found = None
        for i in range(live.size - 1):
            for j in range(i + 1, live.size):
                a, b = int(live[i]), int(live[j])
                if _kernels.merge_eval(colors, alive, rdeg, a, b) == 0:
                    found = (a, b)
                    break
            if found:
                break
        if found is None:
            raise ValidationError("no twin pair available; graph is not twin-collapsible")
        _kernels.merge_step(colors, alive, rdeg, *found)
        steps.append(MergeStep(*found))
    return steps


def _latin_selfcomp_certificate(n):
    """ls(Z_n) for odd conference orders via its Cayley presentation on
    Z_n x Z_n with row, column, and symbol difference sets."""
    grp = AbelianGroupSpec((n, n))
    members = set()
    for a in range(1, n):
        members.add(grp.encode((0, a)))
        members.add(grp.encode((a, 0)))
        members.add(grp.encode((a, (-a) % n)))
    return selfcomp_pairs(grp, ConnectionSet(members))


def latin_grid_scheme(n: int) -> SchemeCertificate:
    """Certificate for the cyclic Latin square graph ls(Z_n).

    For n >= 7 realizes the partition chain through grids of 2^y x 2^x
    rectangles, alternating vertical and horizontal pair merges in
    row-major order of the target parts; width stays below 4n-8.  Small
    orders follow the case split of the underlying argument: n in {4, 6}
    pair rows vertically and finish by increasing representative (the
    block count alone bounds the rest), n = 5 delegates to the inverse
    pairing of its Cayley presentation, and n <= 3 is twin-collapsible.
    """
    if n < 1:
        raise ValidationError(f"latin grid scheme needs n >= 1, got {n}")
    if n == 5:
        return _latin_selfcomp_certificate(5)
    G = latin_square_graph(cyclic_latin(n))
    if n <= 3:
        return _certify(G, _twin_first_steps(G), 0)

    def vid(r, c):
        return r * n + c

    emitter = _Emitter(G.n)
    if n in (4, 6):
        for i in range(n // 2):
            for j in range(n):
                emitter.merge(vid(2 * i, j), vid(2 * i + 1, j))
        reps = emitter.representatives()
        for r in reps[1:]:
            emitter.merge(reps[0], r)
        return _certify(G, emitter.steps, 4 * n - 8)

    levels = math.ceil(math.log2(n))
    for t in range(levels):
        hs, w = 1 << t, 1 << t  # source block height and current width
        ht = hs * 2
        for i in range(math.ceil(n / ht)):
            r2 = i * ht + hs
            if r2 >= n:
                continue
            for j in range(math.ceil(n / w)):
                emitter.merge(vid(i * ht, j * w), vid(r2, j * w))
        h = ht  # now transition width: 2^t -> 2^(t+1) at height 2^(t+1)
        ws, wt = 1 << t, 1 << (t + 1)
        for i in range(math.ceil(n / h)):
            for j in range(math.ceil(n / wt)):
                c2 = j * wt + ws
                if c2 >= n:
                    continue
                emitter.merge(vid(i * h, j * wt), vid(i * h, c2))
    return _certify(G, emitter.steps, 4 * n - 8)


def girth_reduce(G: Trigraph) -> SchemeCertificate:
    """Partial sequence collapsing triangles and 4-cycles of a subcubic
    trigraph until the underlying girth is at least 5; width stays <= 9 and
    the residual is again subcubic.

    Triangles (smallest vertex triple first) are contracted to one vertex
    in two steps; in the then triangle-free graph, the matching of the
    lexicographically smallest 4-cycle is contracted, one merge per edge.
    """
    if G.underlying().max_degree() > 3:
        raise ValidationError("girth reduction needs a subcubic trigraph")
    state = QuotientState(G)
    emitter = _Emitter(G.n)

    def live_adj():
        reps = sorted(int(r) for r in np.flatnonzero(state.alive))
        nbrs = {
            r: [int(w) for w in np.flatnonzero(state.colors[r])]
            for r in reps
        }
        return reps, nbrs

    while True:
        reps, nbrs = live_adj()
        tri = None
        for u in reps:
            for v in nbrs[u]:
                if v <= u:
                    continue
                common = [w for w in nbrs[u] if w > v and w in nbrs[v]]
                if common:
                    tri = (u, v, min(common))
                    break
            if tri:
                break
        if tri:
            u, v, w = tri
            for x, y in ((u, v), (u, w)):
                emitter.merge(x, y)
                state.merge(x, y)
            continue
        quad = None
        for a in reps:
            na = set(nbrs[a])
            for c in reps:
                if c <= a or c in na:
                    continue
                common = sorted(w for w in nbrs[a] if w in nbrs[c])
                if len(common) >= 2:
                    quad = (a, common[0], c, common[1])
                    break
            if quad:
                break
        if quad is None:
            break
        a, b, c, d = quad
        for x, y in ((a, b), (c, d)):
            emitter.merge(x, y)
            state.merge(x, y)
    return _certify(G, emitter.steps, 9)


DEFAULT_ASYM_BUDGET = 200_000


def asym_reduce(G: Trigraph, node_budget: int | None = DEFAULT_ASYM_BUDGET) -> SchemeCertificate:
    """Contract orbits of successive quotient automorphisms until the
    quotient is asymmetric (or the search budget runs out, in which case
    the certificate is flagged inconclusive: the residual is only possibly
    symmetric).  Width stays within 4*Delta(G) and degrees never grow."""
    emitter = _Emitter(G.n)
    state = QuotientState(G)
    inconclusive = False
    while True:
        H = state.current_trigraph()
        if H.n <= 1:
            break
        phi, exhausted = nontrivial_automorphism(H, node_budget)
        if exhausted:
            inconclusive = True
            break
        if phi is None:
            break
        reps = sorted(int(r) for r in np.flatnonzero(state.alive))
        for i, j in _doubling_steps(_orbit_lists(phi)):
            emitter.merge(reps[i], reps[j])
            state.merge(reps[i], reps[j])
    return _certify(G, emitter.steps, 4 * G.max_degree(), inconclusive=inconclusive)
