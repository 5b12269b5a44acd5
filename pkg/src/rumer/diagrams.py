"""Valence schemes and Rumer diagrams on circularly ordered vertices.

A valence scheme is a loop-free multigraph on vertices 1..n drawn with the
vertices placed clockwise on a circle and every edge drawn as a chord.  A
Rumer diagram is a scheme in which no two chords cross.  Crossing is decided
purely combinatorially, by strict interleaving of endpoint indices; no
floating-point geometry is involved anywhere.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .counting import compositions

#: Per-vertex bond counts (m_1, ..., m_n).
Multidegree = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Edge:
    """Chord between two distinct vertices, stored normalized with i < j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError(f"loop edge ({self.i},{self.j}) is not allowed")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)
        if self.i < 1:
            raise ValueError(f"vertex indices are 1-based, got ({self.i},{self.j})")

    def touches(self, v: int) -> bool:
        return v == self.i or v == self.j

    def other(self, v: int) -> int:
        """The endpoint opposite to v."""
        if v == self.i:
            return self.j
        if v == self.j:
            return self.i
        raise ValueError(f"vertex {v} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def _coerce_edges(edges: Iterable) -> tuple[Edge, ...]:
    out = []
    for e in edges:
        if not isinstance(e, Edge):
            e = Edge(*e)
        out.append(e)
    return tuple(sorted(out))


@dataclass(frozen=True)
class ValenceScheme:
    """Loop-free multigraph on vertices 1..n; the edge multiset is kept sorted.

    Two schemes are equal iff they have the same n and the same sorted edge
    list, so schemes are usable as dict keys and set members.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        edges = _coerce_edges(self.edges)
        for e in edges:
            if e.j > self.n:
                raise ValueError(f"edge {e} does not fit on {self.n} vertices")
        object.__setattr__(self, "edges", edges)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return sum(1 for e in self.edges for end in (e.i, e.j) if end == v)

    def multidegree(self) -> Multidegree:
        degs = [0] * self.n
        for e in self.edges:
            degs[e.i - 1] += 1
            degs[e.j - 1] += 1
        return tuple(degs)

    def to_text(self) -> str:
        body = "".join(str(e) for e in self.edges)
        return f"n={self.n};" + (f" {body}" if body else "")

    @classmethod
    def from_text(cls, text: str) -> "ValenceScheme":
        m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)*)", text)
        if m is None:
            raise ValueError(f"not a valid diagram text form: {text!r}")
        n = int(m.group(1))
        pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", m.group(2))
        return cls(n, [Edge(int(a), int(b)) for a, b in pairs])

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[e.i, e.j] for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ValenceScheme":
        return cls(int(data["n"]), [Edge(int(i), int(j)) for i, j in data["edges"]])

    @classmethod
    def from_json(cls, text: str) -> "ValenceScheme":
        return cls.from_json_dict(json.loads(text))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RumerDiagram:
    """A valence scheme whose chords are pairwise non-crossing."""

    scheme: ValenceScheme

    def __post_init__(self) -> None:
        bad = first_crossing(self.scheme)
        if bad is not None:
            raise ValueError(f"edges {bad[0]} and {bad[1]} cross; not a Rumer diagram")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "RumerDiagram":
        return cls(ValenceScheme(n, edges))

    @property
    def n(self) -> int:
        return self.scheme.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.scheme.edges

    def multidegree(self) -> Multidegree:
        return self.scheme.multidegree()

    def __str__(self) -> str:
        return self.scheme.to_text()


def edges_cross(e1: Edge, e2: Edge) -> bool:
    """True iff the two chords strictly interleave around the circle.

    Chords that share an endpoint, and parallel copies of the same chord,
    never cross.
    """
    a, b = e1.i, e1.j
    c, d = e2.i, e2.j
    return a < c < b < d or c < a < d < b


def first_crossing(scheme: ValenceScheme) -> tuple[Edge, Edge] | None:
    """The lexicographically first crossing pair of edges, or None."""
    distinct = sorted(set(scheme.edges))
    for e1, e2 in combinations(distinct, 2):
        if edges_cross(e1, e2):
            return e1, e2
    return None


def is_rumer(scheme: ValenceScheme) -> bool:
    return first_crossing(scheme) is None


def multidegree_of(scheme: ValenceScheme) -> Multidegree:
    """Per-vertex count of incident edge ends; the sum is twice the edge count."""
    return scheme.multidegree()


def arc_vertices(n: int, e: Edge) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertices strictly inside each of the two circular arcs bounded by e.

    The first arc runs from e.i to e.j through ascending indices, the second
    wraps around through n and back to 1.
    """
    inside = tuple(range(e.i + 1, e.j))
    outside = tuple(range(e.j + 1, n + 1)) + tuple(range(1, e.i))
    return inside, outside


def arc_lengths(scheme: ValenceScheme, e: Edge) -> tuple[int, int]:
    """For each arc of e: the number of internal non-isolated vertices plus one.

    e must be an edge of the scheme.
    """
    if e not in scheme.edges:
        raise ValueError(f"edge {e} is not an edge of {scheme}")
    degs = scheme.multidegree()
    lengths = []
    for arc in arc_vertices(scheme.n, e):
        lengths.append(sum(1 for v in arc if degs[v - 1] > 0) + 1)
    return lengths[0], lengths[1]


def _validated_degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in degrees)
    if not d:
        raise ValueError("multidegree must have at least one entry")
    if any(x < 0 for x in d):
        raise ValueError(f"multidegree entries must be nonnegative, got {d}")
    return d


def _degree_constrained_edge_lists(
    degrees: Sequence[int], noncrossing: bool
) -> Iterator[tuple[Edge, ...]]:
    """Backtracking core shared by the degree-constrained enumerators.

    Edges are chosen in nondecreasing lexicographic order, so every multiset
    is produced exactly once and already canonically sorted.  The next edge
    must cover the smallest vertex that still has free valence: later edges
    cannot reach it, so anything else is a dead end.
    """
    n = len(degrees)
    remaining = [0] + list(degrees)  # 1-based
    chosen: list[Edge] = []

    def extend(last: Edge | None) -> Iterator[tuple[Edge, ...]]:
        v = next((u for u in range(1, n + 1) if remaining[u]), None)
        if v is None:
            yield tuple(chosen)
            return
        w_start = v + 1
        if last is not None and last.i == v:
            w_start = max(w_start, last.j)  # parallel copy of last is allowed
        for w in range(w_start, n + 1):
            if not remaining[w]:
                continue
            e = Edge(v, w)
            if noncrossing and any(edges_cross(e, c) for c in chosen):
                continue
            remaining[v] -= 1
            remaining[w] -= 1
            chosen.append(e)
            yield from extend(e)
            chosen.pop()
            remaining[v] += 1
            remaining[w] += 1

    yield from extend(None)


def enumerate_rumer_by_multidegree(degrees: Sequence[int]) -> list[RumerDiagram]:
    """All non-crossing loop-free multigraphs with exactly these vertex degrees.

    Infeasible prescriptions (odd degree sum, or degrees that no loop-free
    multigraph can realize) yield the empty list: zero is the truthful count.
    """
    d = _validated_degrees(degrees)
    if sum(d) % 2:
        return []
    n = len(d)
    return [
        RumerDiagram(ValenceScheme(n, edges))
        for edges in _degree_constrained_edge_lists(d, noncrossing=True)
    ]


def enumerate_valence_schemes_by_multidegree(degrees: Sequence[int]) -> list[ValenceScheme]:
    """All loop-free multigraphs (crossing allowed) with these vertex degrees."""
    d = _validated_degrees(degrees)
    if sum(d) % 2:
        return []
    n = len(d)
    return [
        ValenceScheme(n, edges)
        for edges in _degree_constrained_edge_lists(d, noncrossing=False)
    ]


def enumerate_rumer(n: int, m: int) -> list[RumerDiagram]:
    """All Rumer diagrams with m bonds on n vertices, canonically ordered.

    Computed as the union over all multidegrees with sum 2m; the per-degree
    sets are pairwise disjoint, so no diagram appears twice.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if m < 0:
        raise ValueError(f"bond count must be nonnegative, got m={m}")
    found = []
    for d in compositions(2 * m, n):
        found.extend(enumerate_rumer_by_multidegree(d))
    found.sort(key=lambda D: D.edges)
    return found


def enumerate_valence_schemes(n: int, m: int) -> Iterator[ValenceScheme]:
    """All loop-free multigraphs with m edges on n vertices, each exactly once.

    Streams size-m multisets over the sorted list of possible edges, so the
    output order is canonical.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if m < 0:
        raise ValueError(f"edge count must be nonnegative, got m={m}")
    all_edges = [Edge(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for combo in combinations_with_replacement(all_edges, m):
        yield ValenceScheme(n, combo)
