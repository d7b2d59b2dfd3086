"""Deterministic generators for the graph families under study.

Every generator returns a red-free Trigraph with a documented vertex
labeling, so that constructive contraction schemes can reference vertices
by construction:

  * johnson/kneser: vertices are the 2-subsets of {1..n} in lexicographic
    order ((1,2), (1,3), ..., (1,n), (2,3), ...).
  * rook, latin_square_graph: cell (r, c) is vertex r*n + c (row-major).
  * cayley_abelian: group elements in mixed-radix order, first modulus
    most significant; for Z_m1 x Z_m2 the element (a, b) is a*m2 + b.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

import numpy as np

from .bounds import EliminationOrder
from .errors import ValidationError
from .trigraph import BLACK, Trigraph, complement


def two_subsets(n):
    """Lexicographic 2-subsets of {1..n}; the johnson/kneser vertex labels."""
    return list(combinations(range(1, n + 1), 2))


def johnson(n: int) -> Trigraph:
    """Johnson graph J(n,2): 2-subsets adjacent when they meet in one element."""
    if n < 2:
        raise ValidationError(f"johnson needs n >= 2, got {n}")
    labels = two_subsets(n)
    edges = []
    for i, s in enumerate(labels):
        for j in range(i + 1, len(labels)):
            t = labels[j]
            if len(set(s) & set(t)) == 1:
                edges.append((i, j))
    return Trigraph.from_edges(len(labels), edges)


def kneser(n: int) -> Trigraph:
    """Kneser graph K(n,2) = complement of J(n,2), identical labeling."""
    if n < 2:
        raise ValidationError(f"kneser needs n >= 2, got {n}")
    return complement(johnson(n))


def petersen() -> Trigraph:
    """The Petersen graph, as K(5,2)."""
    return kneser(5)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def paley(p: int) -> Trigraph:
    """Paley graph on a prime p = 1 (mod 4): u ~ v iff u-v is a nonzero square.

    Restricted to primes; prime-power fields are out of scope here (the one
    prime-power case we need, order 25, enters via cayley_abelian).
    """
    if not _is_prime(p):
        raise ValidationError(f"paley needs a prime, got {p}")
    if p % 4 != 1:
        raise ValidationError(f"paley needs p = 1 (mod 4), got {p}")
    residues = {(x * x) % p for x in range(1, p)}
    edges = [(u, v) for u in range(p) for v in range(u + 1, p) if (u - v) % p in residues]
    return Trigraph.from_edges(p, edges)


def paley_residues(p: int) -> frozenset:
    """The nonzero quadratic residues mod p, i.e. the Paley connection set."""
    return frozenset((x * x) % p for x in range(1, p))


def rook(n: int) -> Trigraph:
    """Rook's graph: n x n cells, adjacent on shared row or column."""
    if n < 1:
        raise ValidationError(f"rook needs n >= 1, got {n}")
    edges = []
    for r in range(n):
        for c in range(n):
            u = r * n + c
            for c2 in range(c + 1, n):
                edges.append((u, r * n + c2))
            for r2 in range(r + 1, n):
                edges.append((u, r2 * n + c))
    return Trigraph.from_edges(n * n, edges)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Z_m1 x ... x Z_mk with elements encoded as mixed-radix integers."""

    moduli: tuple

    def __post_init__(self):
        if not self.moduli or any(m < 2 for m in self.moduli):
            raise ValidationError(f"moduli must all be >= 2, got {self.moduli}")
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))

    @property
    def order(self) -> int:
        return prod(self.moduli)

    def decode(self, e: int):
        digits = []
        for m in reversed(self.moduli):
            digits.append(e % m)
            e //= m
        return tuple(reversed(digits))

    def encode(self, digits) -> int:
        e = 0
        for d, m in zip(digits, self.moduli):
            e = e * m + (d % m)
        return e

    def add(self, a: int, b: int) -> int:
        da, db = self.decode(a), self.decode(b)
        return self.encode(tuple(x + y for x, y in zip(da, db)))

    def neg(self, a: int) -> int:
        return self.encode(tuple(-d for d in self.decode(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed set of nonzero group elements (validated at use)."""

    members: frozenset

    def __init__(self, members):
        object.__setattr__(self, "members", frozenset(int(m) for m in members))


def cayley_abelian(grp: AbelianGroupSpec, S: ConnectionSet) -> Trigraph:
    """Cayley graph of an abelian group: u ~ v iff v - u lies in S."""
    members = S.members
    if 0 in members:
        raise ValidationError("connection set must not contain the identity")
    for s in members:
        if not (0 < s < grp.order):
            raise ValidationError(f"connection-set element {s} out of range")
        if grp.neg(s) not in members:
            raise ValidationError(f"connection set not inverse-closed: missing -{s}")
    n = grp.order
    edges = []
    for u in range(n):
        for s in members:
            v = grp.add(u, s)
            if u < v:
                edges.append((u, v))
    return Trigraph.from_edges(n, edges)


def translation(grp: AbelianGroupSpec, g: int):
    """Vertex image array of v -> v + g; an automorphism of any Cay(grp, S)."""
    return np.array([grp.add(v, g) for v in range(grp.order)], dtype=np.int64)


@dataclass(frozen=True)
class LatinSquare:
    """n x n matrix over [0, n) where every row and column is a permutation."""

    cells: tuple

    def __post_init__(self):
        n = len(self.cells)
        cells = tuple(tuple(int(x) for x in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        target = set(range(n))
        for r, row in enumerate(cells):
            if len(row) != n or set(row) != target:
                raise ValidationError(f"row {r} is not a permutation of 0..{n - 1}")
        for c in range(n):
            if {row[c] for row in cells} != target:
                raise ValidationError(f"column {c} is not a permutation of 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.cells)


def cyclic_latin(n: int) -> LatinSquare:
    """Addition table of Z_n: cells[r][c] = (r + c) mod n."""
    if n < 1:
        raise ValidationError(f"cyclic_latin needs n >= 1, got {n}")
    return LatinSquare(tuple(tuple((r + c) % n for c in range(n)) for r in range(n)))


def latin_square_graph(M: LatinSquare) -> Trigraph:
    """Cells of M, adjacent on shared row, column, or symbol; 3(n-1)-regular."""
    n = M.n
    colors = np.zeros((n * n, n * n), dtype=np.uint8)

    def clique(vs):
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                colors[u, v] = BLACK
                colors[v, u] = BLACK

    for r in range(n):
        clique([r * n + c for c in range(n)])
    for c in range(n):
        clique([r * n + c for r in range(n)])
    by_symbol = {}
    for r in range(n):
        for c in range(n):
            by_symbol.setdefault(M.cells[r][c], []).append(r * n + c)
    for vs in by_symbol.values():
        clique(vs)
    return Trigraph(n * n, colors, _trusted=True)


def random_degenerate(n: int, d: int, seed: int):
    """Random d-degenerate test instance with the identity elimination order.

    Vertex i receives min(i, d') left-neighbors drawn uniformly without
    replacement among 0..i-1, where d' is itself uniform in [0, d]; drawing
    the per-vertex budget rather than always using d exercises uneven left
    degrees.  Reproducible from the seed.
    """
    if n < 1 or d < 1:
        raise ValidationError(f"random_degenerate needs n >= 1 and d >= 1, got ({n}, {d})")
    rng = np.random.default_rng(seed)
    edges = []
    max_left = 0
    for i in range(1, n):
        k = min(i, int(rng.integers(0, d + 1)))
        max_left = max(max_left, k)
        if k:
            for j in rng.choice(i, size=k, replace=False):
                edges.append((int(j), i))
    G = Trigraph.from_edges(n, edges)
    order = EliminationOrder(order=tuple(range(n)), d=max_left)
    return G, order
