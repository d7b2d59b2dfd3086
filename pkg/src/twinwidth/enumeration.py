"""Desk-scale graph enumeration.

Labeled enumeration walks all 2^C(n,2) edge subsets for n <= 7; duplicates
across isomorphism are allowed there because every downstream check is
isomorphism-invariant.  The cubic stream is isomorph-free: connected
graphs of maximum degree 3 are grown one vertex at a time (each new vertex
attaches to 1..3 earlier vertices of degree <= 2, which reaches every
connected subcubic graph via a reverse BFS order), deduplicated per level
by canonical form, and filtered to 3-regular at the target order.
Disconnected cubic graphs are deliberately not emitted: the twin-width of
a disjoint union is the maximum over its components, so sweeping connected
graphs decides the bound for all of them.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .bounds import graph_from_code
from .canon import canonical_form
from .errors import ValidationError
from .trigraph import BLACK, Trigraph

LABELED_CAP = 7
CUBIC_CAP = 12
SUBCUBIC_CAP = 12


def labeled_graphs(n: int):
    """All labeled graphs on n vertices, one per edge-subset code."""
    if n > LABELED_CAP:
        raise ValidationError(
            f"labeled enumeration capped at n <= {LABELED_CAP}; "
            "ingest larger corpora via graph6 files"
        )
    npairs = n * (n - 1) // 2
    for code in range(1 << npairs):
        yield graph_from_code(n, code)


def _augmentations(colors, cubic_target=None):
    """Child matrices obtained by attaching one new vertex to 1..3 old ones."""
    k = colors.shape[0]
    deg = (colors != 0).sum(axis=1)
    eligible = [v for v in range(k) if deg[v] <= 2]
    out = []
    for size in (1, 2, 3):
        for T in combinations(eligible, size):
            child = np.zeros((k + 1, k + 1), dtype=np.uint8)
            child[:k, :k] = colors
            for v in T:
                child[v, k] = BLACK
                child[k, v] = BLACK
            if cubic_target is not None:
                cdeg = (child != 0).sum(axis=1)
                deficiency = int((3 - cdeg).sum())
                left = cubic_target - (k + 1)
                if deficiency > 3 * left:
                    continue
                if int((3 - cdeg).max()) > left:
                    continue
            out.append(child)
    return out


def connected_subcubic_classes(n_max: int, cubic_target=None):
    """Canonical matrices of all connected graphs with max degree <= 3.

    Yields (k, colors) pairs level by level, one representative per
    isomorphism class, for 1 <= k <= n_max.  With cubic_target set, levels
    are pruned to partial graphs that can still complete to a 3-regular
    graph on cubic_target vertices.
    """
    if n_max < 1:
        return
    seed = np.zeros((1, 1), dtype=np.uint8)
    level = {canonical_form(seed): seed}
    yield 1, seed
    for k in range(1, n_max):
        nxt = {}
        for colors in level.values():
            for child in _augmentations(colors, cubic_target):
                key = canonical_form(child)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
        for colors in level.values():
            yield k + 1, colors


def connected_subcubic_graphs(n: int):
    """All connected graphs with max degree <= 3 on exactly n vertices."""
    if n > SUBCUBIC_CAP:
        raise ValidationError(f"subcubic enumeration capped at n <= {SUBCUBIC_CAP}")
    for k, colors in connected_subcubic_classes(n):
        if k == n:
            yield Trigraph(n, colors.copy(), _trusted=True)


def cubic_graphs(n: int):
    """All connected cubic graphs on exactly n vertices, isomorph-free."""
    if n > CUBIC_CAP:
        raise ValidationError(
            f"cubic enumeration capped at n <= {CUBIC_CAP}; "
            "ingest larger corpora via graph6 files"
        )
    if n < 4 or n % 2:
        return
    for k, colors in connected_subcubic_classes(n, cubic_target=n):
        if k == n and ((colors != 0).sum(axis=1) == 3).all():
            yield Trigraph(n, colors.copy(), _trusted=True)


def enumerate_graphs(n: int, cubic: bool = False):
    """Stream of trigraphs: labeled edge subsets, or connected cubic graphs."""
    if cubic:
        yield from cubic_graphs(n)
    else:
        yield from labeled_graphs(n)
