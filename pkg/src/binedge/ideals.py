"""Binomial edge ideals, the prime ideals P_T(G) and their minimal members.

Ring convention: for a graph on N vertices the ambient ring has 2N variables
x_1..x_N, y_1..y_N. A generator is one of

* ``("x", i)`` or ``("y", i)``: the variable itself (degree 1);
* ``("m", i, j)`` with ``i < j``: the minor ``x_i*y_j - x_j*y_i`` (degree 2).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidArgument, TooLarge, Unsupported
from .graphs import Graph, connected_components, delete_vertices, is_connected, num_components

Generator = tuple

MAX_ENUMERATION_VERTICES = 22


def generator_degree(g: Generator) -> int:
    return 2 if g[0] == "m" else 1


def format_generator(g: Generator) -> str:
    if g[0] == "m":
        _, i, j = g
        return f"x{i}*y{j}-x{j}*y{i}"
    return f"{g[0]}{g[1]}"


@dataclass(frozen=True)
class BinomialIdeal:
    num_vertices: int
    generators: tuple[Generator, ...]
    label: str = ""

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            if g in seen:
                raise InvalidArgument(f"duplicate generator {format_generator(g)}")
            seen.add(g)
            if g[0] == "m":
                _, i, j = g
                if not 1 <= i < j <= self.num_vertices:
                    raise InvalidArgument(f"minor indices {(i, j)} out of range for N={self.num_vertices}")
            elif g[0] in ("x", "y"):
                if not 1 <= g[1] <= self.num_vertices:
                    raise InvalidArgument(f"variable index {g[1]} out of range for N={self.num_vertices}")
            else:
                raise InvalidArgument(f"unknown generator kind {g[0]!r}")

    @property
    def num_vars(self) -> int:
        return 2 * self.num_vertices

    def __len__(self):
        return len(self.generators)

    def __add__(self, other: "BinomialIdeal") -> "BinomialIdeal":
        """Ideal sum, generators merged without duplicates."""
        if other.num_vertices != self.num_vertices:
            raise InvalidArgument("ideals live in different rings")
        gens = list(self.generators)
        have = set(gens)
        gens += [g for g in other.generators if g not in have]
        return BinomialIdeal(self.num_vertices, tuple(gens), f"({self.label})+({other.label})")

    def pretty(self) -> str:
        return "(" + ", ".join(format_generator(g) for g in self.generators) + ")"


def edge_binomials(g: Graph) -> BinomialIdeal:
    """J_G: one minor per edge, in lexicographic edge order."""
    gens = tuple(("m", i, j) for i, j in g.sorted_edges())
    return BinomialIdeal(g.num_vertices, gens, "J_G")


def minor_ideal(vertices: Sequence[int], num_vertices: int) -> BinomialIdeal:
    """All 2x2 minors of the 2 x k matrix on columns ``vertices`` (strictly increasing)."""
    vertices = list(vertices)
    if not vertices:
        raise InvalidArgument("minor_ideal needs at least one column")
    if any(b <= a for a, b in zip(vertices, vertices[1:])):
        raise InvalidArgument(f"column indices must be strictly increasing: {vertices}")
    if vertices[0] < 1 or vertices[-1] > num_vertices:
        raise InvalidArgument(f"column indices {vertices} out of range for N={num_vertices}")
    gens = tuple(("m", i, j) for i, j in combinations(vertices, 2))
    return BinomialIdeal(num_vertices, gens, "I(" + ",".join(map(str, vertices)) + ")")


def variable_ideal(vertices: Iterable[int], num_vertices: int, label: str = "") -> BinomialIdeal:
    """(x_i, y_i : i in vertices)."""
    vs = sorted(set(vertices))
    gens = tuple(("x", i) for i in vs) + tuple(("y", i) for i in vs)
    return BinomialIdeal(num_vertices, gens, label or "vars(" + ",".join(map(str, vs)) + ")")


@dataclass(frozen=True)
class PrimeComponent:
    cut_set: frozenset[int]
    components: tuple[frozenset[int], ...]
    height: int
    dim: int

    @property
    def num_components(self) -> int:
        return len(self.components)

    def to_dict(self) -> dict:
        return {
            "cut_set": sorted(self.cut_set),
            "components": [sorted(c) for c in self.components],
            "height": self.height,
            "dim": self.dim,
        }


def prime_component(g: Graph, cut: Iterable[int]) -> tuple[PrimeComponent, BinomialIdeal]:
    """P_T(G): variables of T plus the complete-graph minors of every component of G - T."""
    cut = frozenset(cut)
    if not cut <= g.vertices:
        raise InvalidArgument(f"cut set {sorted(cut)} is not a subset of the vertices")
    comps = tuple(connected_components(delete_vertices(g, cut)))
    n = len(g.vertices)
    height = n - len(comps) + len(cut)
    pc = PrimeComponent(cut, comps, height, 2 * g.num_vertices - height)

    gens = [("x", i) for i in sorted(cut)] + [("y", i) for i in sorted(cut)]
    for comp in comps:
        gens.extend(("m", i, j) for i, j in combinations(sorted(comp), 2))
    label = "P_{" + ",".join(map(str, sorted(cut))) + "}"
    return pc, BinomialIdeal(g.num_vertices, tuple(gens), label)


def _is_minimal_cut(g: Graph, cut: frozenset[int], c_cut: int) -> bool:
    for i in cut:
        if num_components(g, cut - {i}) >= c_cut:
            return False
    return True


def minimal_primes(g: Graph) -> list[PrimeComponent]:
    """Cut sets T with T empty or c(T - {i}) < c(T) for every i in T.

    Brute force over all subsets, ordered by size then lexicographically.
    """
    if not is_connected(g):
        raise Unsupported("minimal prime criterion assumes a connected graph")
    verts = sorted(g.vertices)
    if len(verts) > MAX_ENUMERATION_VERTICES:
        raise TooLarge("cut-set enumeration", 2 ** len(verts), 2 ** MAX_ENUMERATION_VERTICES)
    out = [prime_component(g, ())[0]]
    for size in range(1, len(verts) + 1):
        for cut in combinations(verts, size):
            cut = frozenset(cut)
            c = num_components(g, cut)
            # a single component can never beat c(T - {i}) >= 1
            if c < 2:
                continue
            if _is_minimal_cut(g, cut, c):
                out.append(prime_component(g, cut)[0])
    return out


def minimal_prime_ideals(g: Graph) -> list[tuple[PrimeComponent, BinomialIdeal]]:
    return [prime_component(g, pc.cut_set) for pc in minimal_primes(g)]


def krull_dim_from_primes(g: Graph) -> int:
    return max(pc.dim for pc in minimal_primes(g))


def intersection_graph_ideal(m: int, n: int, drop: str) -> BinomialIdeal:
    """Binomial edge ideal of the complete graph on [n+m] with the edges inside one part removed.

    ``drop="P2"`` removes edges among {n+1..n+m} (this ideal equals the
    intersection of the complete-graph ideal with the variables of P1);
    ``drop="P1"`` removes edges among {1..n} (intersection with the variables of P2).
    """
    if drop not in ("P1", "P2"):
        raise InvalidArgument("drop must be 'P1' or 'P2'")
    N = n + m
    if drop == "P2":
        inside = lambda i, j: i > n and j > n  # noqa: E731
    else:
        inside = lambda i, j: i <= n and j <= n  # noqa: E731
    gens = tuple(("m", i, j) for i, j in combinations(range(1, N + 1), 2) if not inside(i, j))
    return BinomialIdeal(N, gens, f"K_{N} minus {drop} edges")
