"""Vertex permutations: automorphism carriers, orbits, cyclic towers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidationError


@dataclass(frozen=True)
class Permutation:
    """Bijection on [0, n) given by its image array."""

    image: tuple

    def __post_init__(self):
        img = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", img)
        n = len(img)
        if sorted(img) != list(range(n)):
            raise ValidationError("image is not a bijection on [0, n)")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(n))
        for cyc in cycles:
            for i, v in enumerate(cyc):
                img[v] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    @property
    def n(self):
        return len(self.image)

    def __call__(self, v):
        return self.image[v]

    def is_identity(self):
        return all(self.image[v] == v for v in range(self.n))

    def cycles(self):
        """Cycle decomposition; cycles sorted by minimum, each starting there."""
        seen = [False] * self.n
        out = []
        for v in range(self.n):
            if seen[v]:
                continue
            cyc = []
            w = v
            while not seen[w]:
                seen[w] = True
                cyc.append(w)
                w = self.image[w]
            out.append(cyc)
        return out

    def orbits(self):
        """Orbits of the generated cyclic group (= the cycles)."""
        return self.cycles()

    def order(self):
        o = 1
        for cyc in self.cycles():
            o = o * len(cyc) // gcd(o, len(cyc))
        return o

    def inverse(self):
        img = [0] * self.n
        for v, w in enumerate(self.image):
            img[w] = v
        return Permutation(tuple(img))

    def compose(self, other: "Permutation"):
        """self after other: (self * other)(v) = self(other(v))."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(self.n)))

    def violated_edge(self, G):
        """First edge of G's underlying simple graph not preserved, or None."""
        if self.n != G.n:
            raise ValidationError(f"permutation on {self.n} points does not fit n={G.n}")
        for u, v, _c in G.edges():
            iu, iv = self.image[u], self.image[v]
            if not G.has_edge(iu, iv):
                return (u, v)
        return None

    def is_automorphism(self, G):
        return self.violated_edge(G) is None
