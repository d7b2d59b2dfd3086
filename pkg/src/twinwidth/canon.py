"""Canonical forms, isomorphism, and automorphism search for small trigraphs.

All functions take a symmetric uint8 color matrix (0 none, 1 black, 2 red);
automorphisms are of the underlying simple graph, so callers pass the 0/1
adjacency when colors must be ignored.

The canonical form is the minimum, over all vertex orderings compatible
with iterated color refinement, of the row-by-row lower-triangle color
string.  Branches are cut by prefix comparison and by skipping true twins
(vertices whose transposition is an automorphism), which keeps highly
symmetric states such as red cliques linear instead of factorial.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import BudgetExhausted


def refine(colors, classes):
    """Iterated 1-dimensional color refinement with edge colors.

    classes is a sequence of ints (smaller sorts earlier); returns the
    stable class array with ids compacted to 0..k-1 in canonical
    (signature-sorted) order.
    """
    n = colors.shape[0]
    classes = list(classes)
    while True:
        sigs = []
        for v in range(n):
            row = colors[v]
            nb = sorted((int(row[w]), classes[w]) for w in range(n) if row[w])
            sigs.append((classes[v], tuple(nb)))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == classes:
            return classes
        classes = new


def invariant_hash(colors):
    """Cheap isomorphism-invariant digest from the refined class signatures."""
    n = colors.shape[0]
    classes = refine(colors, [0] * n)
    sigs = sorted(
        (classes[v], tuple(sorted((int(colors[v, w]), classes[w]) for w in range(n) if colors[v, w])))
        for v in range(n)
    )
    return hashlib.blake2b(repr((n, sigs)).encode(), digest_size=16).digest()


def canonical_form(colors) -> bytes:
    """Canonical byte string of a colored trigraph; equal iff isomorphic."""
    n = colors.shape[0]
    if n == 0:
        return b"\x00"
    best = None
    classes0 = refine(colors, [0] * n)

    def rec(classes, order, cand, strictly_better):
        nonlocal best
        if len(order) == n:
            if best is None or strictly_better:
                best = bytes(cand)
            return
        unplaced = [v for v in range(n) if v not in order_set]
        target = min(classes[v] for v in unplaced)
        candidates = [v for v in unplaced if classes[v] == target]
        tried = []
        for v in candidates:
            twin = False
            for u in tried:
                if colors[u, v] == colors[v, u] and all(
                    colors[u, x] == colors[v, x] for x in range(n) if x != u and x != v
                ):
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            seg = bytes(int(colors[v, w]) for w in order)
            child_better = strictly_better
            if best is not None and not strictly_better:
                ref = best[len(cand):len(cand) + len(seg)]
                if seg > ref:
                    continue
                if seg < ref:
                    child_better = True
            pos = len(order)
            sub = list(classes)
            sub[v] = -1 - pos
            sub = refine(colors, sub)
            order.append(v)
            order_set.add(v)
            cand.extend(seg)
            rec(sub, order, cand, child_better)
            del cand[len(cand) - len(seg):]
            order_set.discard(v)
            order.pop()

    order_set = set()
    rec(classes0, [], bytearray(), False)
    return bytes([n]) + best


class SearchBudget:
    """Node counter shared by a family of backtracking searches."""

    def __init__(self, nodes=None):
        self.nodes = nodes
        self.used = 0

    def tick(self):
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            raise BudgetExhausted(f"search budget of {self.nodes} nodes exhausted")


def _map_search(colors, classes, sources, targets, budget):
    """Automorphism of colors extending sources[i] -> targets[i], or None.

    Backtracking over vertices in refinement-class order; candidates must
    share the refined class and be color-consistent with the partial map.
    """
    n = colors.shape[0]
    budget.tick()
    by_class = {}
    for v in range(n):
        by_class.setdefault(classes[v], []).append(v)
    # class sizes must be automorphism-invariant, nothing to check here:
    # source and target classes coincide because the graph maps to itself.
    mapped_src = list(sources)
    mapped_dst = list(targets)
    used = [False] * n
    for t in mapped_dst:
        used[t] = True
    for s, t in zip(mapped_src, mapped_dst):
        if classes[s] != classes[t]:
            return None
        for j in range(len(mapped_src)):
            if colors[s, mapped_src[j]] != colors[t, mapped_dst[j]]:
                return None
    rest = sorted(
        (v for v in range(n) if v not in set(mapped_src)),
        key=lambda v: (len(by_class[classes[v]]), classes[v], v),
    )

    def extend(k):
        budget.tick()
        if k == len(rest):
            return True
        s = rest[k]
        for t in by_class[classes[s]]:
            if used[t]:
                continue
            ok = True
            for j in range(len(mapped_src)):
                if colors[s, mapped_src[j]] != colors[t, mapped_dst[j]]:
                    ok = False
                    break
            if not ok:
                continue
            mapped_src.append(s)
            mapped_dst.append(t)
            used[t] = True
            if extend(k + 1):
                return True
            used[t] = False
            mapped_src.pop()
            mapped_dst.pop()
        return False

    if not extend(0):
        return None
    img = [0] * n
    for s, t in zip(mapped_src, mapped_dst):
        img[s] = t
    return img


def _individualized(colors, fixed):
    classes = [0] * colors.shape[0]
    for i, v in enumerate(fixed):
        classes[v] = -1 - i
    return refine(colors, classes)


def automorphism_order(colors, budget=None):
    """(order, generators) of Aut via an orbit-stabilizer chain.

    At each level the minimum vertex of the first non-singleton refinement
    class is chosen as a base point; its orbit under the current stabilizer
    is computed by one map search per candidate, and the recursion descends
    into the point stabilizer.  Coset witnesses plus stabilizer generators
    generate the group.  Counting via products avoids ever listing a large
    group element by element.
    """
    budget = budget or SearchBudget()
    n = colors.shape[0]
    gens = []

    def level(fixed):
        classes = _individualized(colors, fixed)
        cells = {}
        for v in range(n):
            cells.setdefault(classes[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            return 1
        v0 = target[0]
        orbit = 1
        for w in target[1:]:
            img = _map_search(colors, classes, fixed + [v0], fixed + [w], budget)
            if img is not None:
                orbit += 1
                gens.append(img)
        return orbit * level(fixed + [v0])

    order = level([])
    return order, gens


def find_nontrivial_automorphism(colors, budget=None):
    """(image array or None, exhausted flag).

    Descends the same stabilizer chain as automorphism_order but stops at
    the first witness; returns None only when the graph is asymmetric.
    """
    budget = budget or SearchBudget()
    n = colors.shape[0]
    try:
        fixed = []
        while True:
            classes = _individualized(colors, fixed)
            cells = {}
            for v in range(n):
                cells.setdefault(classes[v], []).append(v)
            target = None
            for c in sorted(cells):
                if len(cells[c]) > 1:
                    target = cells[c]
                    break
            if target is None:
                return None, False
            v0 = target[0]
            for w in target[1:]:
                img = _map_search(colors, classes, fixed + [v0], fixed + [w], budget)
                if img is not None:
                    return img, False
            fixed.append(v0)
    except BudgetExhausted:
        return None, True


def colored_isomorphic(a, b, budget=None) -> bool:
    """Exact isomorphism test between two colored trigraphs.

    Runs refinement on the disjoint union so class ids are directly
    comparable, then backtracks over class-respecting maps.
    """
    n = a.shape[0]
    if b.shape[0] != n:
        return False
    if n == 0:
        return True
    union = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    union[:n, :n] = a
    union[n:, n:] = b
    classes = refine(union, [0] * (2 * n))
    left = {}
    right = {}
    for v in range(n):
        left[classes[v]] = left.get(classes[v], 0) + 1
        right[classes[n + v]] = right.get(classes[n + v], 0) + 1
    if left != right:
        return False
    budget = budget or SearchBudget()
    by_class = {}
    for v in range(n):
        by_class.setdefault(classes[n + v], []).append(v)
    order = sorted(range(n), key=lambda v: (left[classes[v]], classes[v], v))
    mapped_src = []
    mapped_dst = []
    used = [False] * n

    def extend(k):
        budget.tick()
        if k == n:
            return True
        s = order[k]
        for t in by_class.get(classes[s], ()):
            if used[t]:
                continue
            ok = True
            for j in range(k):
                if a[s, mapped_src[j]] != b[t, mapped_dst[j]]:
                    ok = False
                    break
            if not ok:
                continue
            mapped_src.append(s)
            mapped_dst.append(t)
            used[t] = True
            if extend(k + 1):
                return True
            used[t] = False
            mapped_src.pop()
            mapped_dst.pop()
        return False

    return extend(0)
