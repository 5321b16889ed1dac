"""Small undirected labelled graphs on vertices 1..N.

Only what the ideal constructions need: complete and complete bipartite
graphs, induced subgraphs after deleting vertices, and connected components.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import InvalidArgument

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``vertices`` defaults to 1..num_vertices; after :func:`delete_vertices`
    it is the surviving label set (labels are never renumbered).
    ``partition`` is ``(P1, P2)`` for graphs built by :func:`complete_bipartite`.
    """

    num_vertices: int
    edges: frozenset[Edge]
    partition: tuple[frozenset[int], frozenset[int]] | None = None
    vertices: frozenset[int] = field(default=None)  # type: ignore[assignment]
    swapped: bool = False

    def __post_init__(self):
        if self.vertices is None:
            object.__setattr__(self, "vertices", frozenset(range(1, self.num_vertices + 1)))
        for i, j in self.edges:
            if not i < j:
                raise InvalidArgument(f"edge {(i, j)} is not an ordered pair i < j")
            if i not in self.vertices or j not in self.vertices:
                raise InvalidArgument(f"edge {(i, j)} has an endpoint outside the vertex set")
        if self.partition is not None:
            p1, p2 = self.partition
            if p1 & p2 or (p1 | p2) != self.vertices:
                raise InvalidArgument("partition must split the vertex set into two disjoint parts")
            expected = {(min(a, b), max(a, b)) for a in p1 for b in p2}
            if set(self.edges) != expected:
                raise InvalidArgument("partitioned graph must be complete bipartite")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbours(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    @property
    def part_sizes(self) -> tuple[int, int] | None:
        """``(m, n)`` with ``m = |P2| >= n = |P1|`` for bipartite graphs."""
        if self.partition is None:
            return None
        return len(self.partition[1]), len(self.partition[0])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with the small part labelled first.

    The pair is normalised to ``m >= n``; ``P1 = {1..n}``, ``P2 = {n+1..n+m}``.
    ``Graph.swapped`` records whether the caller passed the parts the other way round.
    """
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
        raise InvalidArgument(f"part sizes must be positive integers, got ({m}, {n})")
    swapped = n > m
    if swapped:
        m, n = n, m
    p1 = frozenset(range(1, n + 1))
    p2 = frozenset(range(n + 1, n + m + 1))
    edges = frozenset((a, b) for a in sorted(p1) for b in sorted(p2))
    return Graph(n + m, edges, (p1, p2), swapped=swapped)


def complete_graph(r: int) -> Graph:
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f"complete graph needs r >= 1, got {r}")
    return Graph(r, frozenset(combinations(range(1, r + 1), 2)))


def delete_vertices(g: Graph, cut: Iterable[int]) -> Graph:
    """Induced subgraph on the vertices not in ``cut``; labels are kept."""
    cut = frozenset(cut)
    if not cut <= g.vertices:
        raise InvalidArgument(f"vertices {sorted(cut - g.vertices)} are not in the graph")
    if not cut:
        return g
    keep = g.vertices - cut
    edges = frozenset(e for e in g.edges if e[0] in keep and e[1] in keep)
    return Graph(g.num_vertices, edges, None, vertices=keep)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their least vertex."""
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen: set[int] = set()
    comps = []
    for v in sorted(g.vertices):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def num_components(g: Graph, cut: Iterable[int] = ()) -> int:
    return len(connected_components(delete_vertices(g, cut)))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
