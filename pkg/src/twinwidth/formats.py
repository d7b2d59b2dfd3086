"""Interchange formats: graph6, trigraph text, sequence text, JSON reports.

graph6 is the 6-bit-per-character encoding used by the standard
enumeration corpora: a size field N(n), then ceil(C(n,2)/6) characters
each carrying six upper-triangle bits in column-major order (0,1), (0,2),
(1,2), (0,3), ...  Characters range over chr(63)..chr(126); unused
trailing bits must be zero.  The long size forms (4 and 8 bytes) are
implemented even though desk-scale data stays below 63 vertices.

The trigraph text format is line-based: "p tgf <n>", then "e <u> <v> <b|r>"
records and "c" comments.  Sequences use "p seq <n>" with one "m <u> <v>"
line per step; a step may name a block by any member, the writer always
emits the block minima.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .trigraph import BLACK, ContractionSequence, MergeStep, Trigraph

GRAPH6_HEADER = ">>graph6<<"


def _g6_read_n(vals, text):
    if not vals:
        raise ParseError("empty graph6 record", offset=0)
    if vals[0] < 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte size field", offset=len(text))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        return n, 4
    if len(vals) < 8:
        raise ParseError("truncated 8-byte size field", offset=len(text))
    n = 0
    for v in vals[2:8]:
        n = (n << 6) | v
    return n, 8


def parse_graph6(line: str) -> Trigraph:
    """Decode one graph6 record (an optional >>graph6<< header is tolerated)."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 record", offset=0)
    vals = []
    for i, ch in enumerate(s):
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise ParseError(f"character {ch!r} out of graph6 range", offset=i)
        vals.append(v)
    n, at = _g6_read_n(vals, s)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - at != need:
        raise ParseError(
            f"body has {len(vals) - at} characters, expected {need} for n={n}",
            offset=len(s),
        )
    edges = []
    k = 0
    bit_src = vals[at:]
    for j in range(1, n):
        for i in range(j):
            v = bit_src[k // 6]
            if (v >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # trailing pad bits must be zero
    while k < 6 * need:
        if (bit_src[k // 6] >> (5 - k % 6)) & 1:
            raise ParseError("nonzero trailing bits", offset=at + k // 6)
        k += 1
    return Trigraph.from_edges(n, edges)


def write_graph6(G: Trigraph) -> str:
    """Encode a red-free trigraph; inverse of parse_graph6."""
    if not G.is_simple():
        raise ValidationError("graph6 cannot carry red edges")
    n = G.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> (6 * s)) & 63 for s in range(5, -1, -1)]
    nbits = n * (n - 1) // 2
    body = [0] * ((nbits + 5) // 6)
    k = 0
    colors = G.colors
    for j in range(1, n):
        for i in range(j):
            if colors[i, j]:
                body[k // 6] |= 1 << (5 - k % 6)
            k += 1
    return "".join(chr(63 + v) for v in head + body)


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line


def parse_trigraph(text: str) -> Trigraph:
    """Parse the "p tgf" trigraph text format."""
    lines = _significant_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'p tgf <n>' header", line=0) from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "p" or parts[1] != "tgf":
        raise ParseError(f"bad header {header!r}", line=lineno)
    try:
        n = int(parts[2])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[2]!r}", line=lineno) from None
    edges = {}
    for lineno, line in lines:
        parts = line.split()
        if parts[0] != "e" or len(parts) != 4:
            raise ParseError(f"expected 'e <u> <v> <b|r>', got {line!r}", line=lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad vertex id in {line!r}", line=lineno) from None
        if parts[3] not in ("b", "r"):
            raise ParseError(f"bad color {parts[3]!r}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in {line!r}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {key}", line=lineno)
        edges[key] = BLACK if parts[3] == "b" else RED
    return Trigraph.from_edges(n, [(u, v, c) for (u, v), c in edges.items()])


def write_trigraph(G: Trigraph) -> str:
    """Canonical text form: edges sorted by (u, v)."""
    out = [f"p tgf {G.n}"]
    for u, v, c in G.edges():
        out.append(f"e {u} {v} {'b' if c == BLACK else 'r'}")
    return "\n".join(out) + "\n"


def parse_sequence(text: str) -> ContractionSequence:
    """Parse a "p seq" file; steps may name blocks by any member."""
    lines = _significant_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'p seq <n>' header", line=0) from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "p" or parts[1] != "seq":
        raise ParseError(f"bad header {header!r}", line=lineno)
    try:
        n = int(parts[2])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[2]!r}", line=lineno) from None
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    steps = []
    for lineno, line in lines:
        parts = line.split()
        if parts[0] != "m" or len(parts) != 3:
            raise ParseError(f"expected 'm <u> <v>', got {line!r}", line=lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad vertex id in {line!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in {line!r}", line=lineno)
        a, b = find(u), find(v)
        if a == b:
            raise ParseError(
                f"step {len(steps)} merges block {a} with itself", line=lineno
            )
        parent[max(a, b)] = min(a, b)
        steps.append(MergeStep(min(u, v), max(u, v)))
    return ContractionSequence(n, tuple(steps))


def write_sequence(seq: ContractionSequence) -> str:
    """Canonical text form: block minima, u < v, one merge per line."""
    parent = list(range(seq.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    out = [f"p seq {seq.n}"]
    for t, s in enumerate(seq.steps):
        a, b = find(s.u), find(s.v)
        if a == b:
            raise ValidationError(f"step {t} merges block {a} with itself")
        a, b = min(a, b), max(a, b)
        out.append(f"m {a} {b}")
        parent[b] = a
    return "\n".join(out) + "\n"


REPORT_VERSION = 1


@dataclass
class Report:
    """One row of batch output; serialized as versioned JSON."""

    graph_id: str
    n: int | None = None
    m: int | None = None
    lb1: int | None = None
    girth: float | None = None
    srg: tuple | None = None
    scheme: str | None = None
    claimed_bound: int | None = None
    verified_width: int | None = None
    solver: dict | None = None
    violation: bool | None = None
    error: str | None = None
    timings: dict | None = None

    def to_dict(self):
        out = {"v": REPORT_VERSION, "graph_id": self.graph_id}
        for key in (
            "n",
            "m",
            "lb1",
            "girth",
            "srg",
            "scheme",
            "claimed_bound",
            "verified_width",
            "solver",
            "violation",
            "error",
            "timings",
        ):
            val = getattr(self, key)
            if val is not None:
                if key == "girth":
                    val = "inf" if val == float("inf") else int(val)
                if key == "srg":
                    val = list(val)
                out[key] = val
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)
