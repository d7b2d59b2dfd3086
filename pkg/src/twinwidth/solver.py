"""Exact and heuristic twin-width solving, automorphism search, orbit quotients.

tww_exact is a depth-first branch-and-bound over merge choices.  The state
is the current quotient trigraph; the bound of a branch is the maximum red
degree seen along its path, pruned against the incumbent (seeded by the
greedy heuristic) and against a memo of visited states keyed by canonical
form.  States with at most MEMO_EXACT_BLOCKS blocks use the exact
canonical labeling; larger states fall back to an invariant hash whose
collisions are resolved by an explicit isomorphism test, so correctness
never depends on hashing.  Children are explored in lexicographic merge
order and the incumbent is replaced only on strict improvement, which
makes results and witnesses deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .canon import (
    SearchBudget,
    automorphism_order,
    canonical_form,
    colored_isomorphic,
    find_nontrivial_automorphism,
    invariant_hash,
)
from .enumeration import enumerate_graphs  # noqa: F401  (spec surface lives here too)
from .errors import BudgetExhausted, ValidationError
from .perms import Permutation
from .trigraph import (
    ContractionSequence,
    MergeStep,
    Partition,
    Trigraph,
    quotient,
    redden,
)

MEMO_EXACT_BLOCKS = 10

EXACT, UPPER_BOUND_ONLY, TIMEOUT = "Exact", "UpperBoundOnly", "Timeout"


@dataclass(frozen=True)
class Budget:
    """Limits for a single solver call; None means unlimited."""

    nodes: int | None = None
    seconds: float | None = None


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: ContractionSequence
    status: str
    nodes: int = 0


@dataclass
class AutGroupInfo:
    generators: list
    order: int | None
    orbits: Partition
    complete: bool = True


def _steps_to_sequence(n, steps):
    return ContractionSequence(n, tuple(MergeStep(a, b) for a, b in steps))


def tww_greedy(G: Trigraph) -> SolveResult:
    """Greedy upper bound: always merge the pair minimizing the next max red
    degree, ties to the lexicographically smallest representative pair."""
    n = G.n
    colors = np.array(G.colors, dtype=np.uint8, copy=True)
    alive = np.ones(n, dtype=bool)
    rdeg = _kernels.red_degrees(colors)
    value = int(rdeg.max()) if n else 0
    steps = []
    for _ in range(max(n - 1, 0)):
        a, b, w = _kernels.greedy_best_pair(colors, alive, rdeg)
        _kernels.merge_step(colors, alive, rdeg, a, b)
        steps.append((a, b))
        value = max(value, w)
    return SolveResult(value=value, witness=_steps_to_sequence(n, steps), status=UPPER_BOUND_ONLY)


class _Memo:
    """Best path-bound seen per state, keyed by canonical form (exact for
    small block counts, collision-checked hash above)."""

    def __init__(self):
        self.exact = {}
        self.hashed = {}

    def dominated(self, sub, path_max) -> bool:
        """True when this state was already reached at an equal-or-better
        path bound; otherwise records the new bound."""
        b = sub.shape[0]
        if b <= MEMO_EXACT_BLOCKS:
            key = canonical_form(sub)
            prev = self.exact.get(key)
            if prev is not None and prev <= path_max:
                return True
            self.exact[key] = path_max
            return False
        bucket = self.hashed.setdefault(invariant_hash(sub), [])
        for entry in bucket:
            if entry[0].shape[0] == b and colored_isomorphic(entry[0], sub):
                if entry[1] <= path_max:
                    return True
                entry[1] = path_max
                return False
        bucket.append([sub.copy(), path_max])
        return False


def _min_merge_bound(colors, alive, rdeg):
    """Smallest achievable max red degree of any single merge; a lower bound
    on the width of every completion when at least two blocks remain."""
    _a, _b, w = _kernels.greedy_best_pair(colors, alive, rdeg)
    return w


def tww_exact(G: Trigraph, budget: Budget | None = None) -> SolveResult:
    """Exact twin-width with a replayable witness.

    Accepts trigraphs (red edges allowed), so stww reduces to this solver.
    Status is Timeout when the budget runs out, with the best incumbent.
    """
    budget = budget or Budget()
    n = G.n
    if n <= 1:
        return SolveResult(0, ContractionSequence(n, ()), EXACT)
    greedy = tww_greedy(G)
    incumbent_value = greedy.value
    incumbent_steps = [(s.u, s.v) for s in greedy.witness.steps]

    colors0 = np.array(G.colors, dtype=np.uint8, copy=True)
    alive0 = np.ones(n, dtype=bool)
    rdeg0 = _kernels.red_degrees(colors0)
    init_width = int(rdeg0.max())
    lower = max(init_width, _min_merge_bound(colors0, alive0, rdeg0))
    if incumbent_value <= lower:
        return SolveResult(incumbent_value, greedy.witness, EXACT)

    memo = _Memo()
    nodes = 0
    deadline = time.monotonic() + budget.seconds if budget.seconds else None
    path = []

    def dfs(colors, alive, rdeg, path_max):
        nonlocal incumbent_value, incumbent_steps, nodes
        nodes += 1
        if budget.nodes is not None and nodes > budget.nodes:
            raise BudgetExhausted("node budget exhausted")
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            raise BudgetExhausted("time budget exhausted")
        live = np.flatnonzero(alive)
        if live.size == 1:
            if path_max < incumbent_value:
                incumbent_value = path_max
                incumbent_steps = list(path)
            return
        sub = np.ascontiguousarray(colors[np.ix_(live, live)])
        if memo.dominated(sub, path_max):
            return
        for i in range(live.size - 1):
            a = int(live[i])
            for j in range(i + 1, live.size):
                b = int(live[j])
                w = _kernels.merge_eval(colors, alive, rdeg, a, b)
                child_max = max(path_max, w)
                if child_max >= incumbent_value:
                    continue
                ccolors = colors.copy()
                calive = alive.copy()
                crdeg = rdeg.copy()
                _kernels.merge_step(ccolors, calive, crdeg, a, b)
                path.append((a, b))
                dfs(ccolors, calive, crdeg, child_max)
                path.pop()

    status = EXACT
    try:
        dfs(colors0, alive0, rdeg0, init_width)
    except BudgetExhausted:
        status = TIMEOUT
    return SolveResult(
        value=incumbent_value,
        witness=_steps_to_sequence(n, incumbent_steps),
        status=status,
        nodes=nodes,
    )


def stww(G: Trigraph, budget: Budget | None = None) -> SolveResult:
    """Sparse twin-width: exact twin-width of the all-red recoloring."""
    return tww_exact(redden(G.underlying()), budget)


def quotient_by_group(G: Trigraph, gens) -> Trigraph:
    """Quotient by the orbit partition of the group generated by gens."""
    for g in gens:
        bad = g.violated_edge(G)
        if bad is not None:
            raise ValidationError(f"generator does not preserve edge {bad}")
    return quotient(G, orbit_partition(G.n, gens))


def orbit_partition(n, gens) -> Partition:
    """Orbits of the generated group: union-find closure under generators."""
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g(v))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return Partition(n, list(groups.values()))


AUT_FULL_TRAVERSAL_CAP = 24


def automorphism_search(G: Trigraph, budget: Budget | None = None) -> AutGroupInfo:
    """Generators, exact order (n <= 24), and orbit partition of Aut.

    Automorphisms are of the underlying simple graph.  When the node budget
    runs out the partial generator set is returned flagged incomplete, with
    order None.
    """
    budget = budget or Budget()
    adj = G.adjacency()
    nodes = budget.nodes
    if G.n > AUT_FULL_TRAVERSAL_CAP and nodes is None:
        nodes = 2_000_000
    sb = SearchBudget(nodes)
    try:
        order, gen_images = automorphism_order(adj, sb)
        complete = True
    except BudgetExhausted:
        order, gen_images, complete = None, [], False
    gens = [Permutation(tuple(img)) for img in gen_images]
    return AutGroupInfo(
        generators=gens,
        order=order,
        orbits=orbit_partition(G.n, gens),
        complete=complete,
    )


def nontrivial_automorphism(G: Trigraph, node_budget=None):
    """(Permutation or None, exhausted flag) on the underlying simple graph."""
    img, exhausted = find_nontrivial_automorphism(G.adjacency(), SearchBudget(node_budget))
    if img is None:
        return None, exhausted
    return Permutation(tuple(img)), exhausted
