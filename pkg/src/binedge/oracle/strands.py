"""Degree-d pieces of ideals in K[x_1..x_N, y_1..y_N] as explicit subspaces.

A monomial is an exponent tuple of length 2N (x's first, then y's); the
monomials of one degree are listed in descending lexicographic order.

Both the variables and the minors x_i*y_j - x_j*y_i are homogeneous for
the finer grading deg(x_k) = deg(y_k) = e_k in Z^N together with the number
of x's.  So every strand splits into independent blocks, one per such
multidegree. Elimination runs per block, which keeps matrices small.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb

from ..errors import InvalidArgument, TooLarge
from ..ideals import BinomialIdeal, generator_degree
from .linalg import FieldConfig, GF32003, densify, nullspace, rank as _rank, rref

DEFAULT_ROW_BOUND = 200_000

Monomial = tuple[int, ...]
BlockKey = tuple[tuple[int, ...], int]


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[Monomial, ...]:
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {mono: k for k, mono in enumerate(monomials(nvars, d))}


def num_monomials(nvars: int, d: int) -> int:
    if d < 0:
        return 0
    if nvars == 0:
        return 1 if d == 0 else 0
    return comb(d + nvars - 1, nvars - 1)


def block_key(mono: Monomial, N: int) -> BlockKey:
    return tuple(mono[k] + mono[N + k] for k in range(N)), sum(mono[:N])


@lru_cache(maxsize=None)
def block_layout(N: int, d: int) -> dict[BlockKey, list[int]]:
    """Global monomial indices of degree d grouped by multidegree, each list ascending."""
    layout: dict[BlockKey, list[int]] = {}
    for k, mono in enumerate(monomials(2 * N, d)):
        layout.setdefault(block_key(mono, N), []).append(k)
    return layout


def generator_terms(g, N: int) -> list[tuple[int, Monomial]]:
    """The generator as (coefficient, exponent) pairs."""
    def unit(*idx):
        e = [0] * (2 * N)
        for k in idx:
            e[k] += 1
        return tuple(e)

    kind = g[0]
    if kind == "x":
        return [(1, unit(g[1] - 1))]
    if kind == "y":
        return [(1, unit(N + g[1] - 1))]
    _, i, j = g
    return [(1, unit(i - 1, N + j - 1)), (-1, unit(j - 1, N + i - 1))]


@dataclass
class StrandBlock:
    cols: list[int]
    pivots: list[int] = dc_field(default_factory=list)
    rows: list[list] = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class GradedStrand:
    """Degree-``degree`` piece of a subspace of S, stored block by block in RREF."""

    num_vertices: int
    degree: int
    field: FieldConfig
    blocks: dict[BlockKey, StrandBlock]

    @property
    def num_vars(self) -> int:
        return 2 * self.num_vertices

    @property
    def basis(self) -> tuple[Monomial, ...]:
        return monomials(self.num_vars, self.degree)

    @property
    def rank(self) -> int:
        return sum(b.rank for b in self.blocks.values())

    @property
    def codim(self) -> int:
        return num_monomials(self.num_vars, self.degree) - self.rank

    def matrix(self) -> list[list]:
        """The whole strand as one RREF matrix over the full monomial basis."""
        n = num_monomials(self.num_vars, self.degree)
        zero = self.field.elem(0)
        rows = []
        for b in self.blocks.values():
            for r in b.rows:
                full = [zero] * n
                for local, v in enumerate(r):
                    full[b.cols[local]] = v
                rows.append(full)
        pivots, reduced = rref(rows, n, self.field)
        return reduced

    def normal_forms(self) -> tuple[dict[int, int], dict[int, list[tuple[int, object]]]]:
        """Standard monomials and the reduction of every monomial modulo the strand.

        Returns ``(std, nf)``: ``std`` maps the global index of each non-pivot
        monomial to its position in the quotient basis, ``nf`` maps every global
        index to a list of (quotient position, coefficient).
        """
        std: dict[int, int] = {}
        nf: dict[int, list] = {}
        one = self.field.elem(1)
        for key in sorted(self.blocks):
            b = self.blocks[key]
            piv = set(b.pivots)
            for local, g in enumerate(b.cols):
                if local not in piv:
                    std[g] = len(std)
            for local, g in enumerate(b.cols):
                if local not in piv:
                    nf[g] = [(std[g], one)]
            for pc, row in zip(b.pivots, b.rows):
                nf[b.cols[pc]] = [
                    (std[b.cols[k]], self.field.neg(v))
                    for k, v in enumerate(row)
                    if v and k != pc
                ]
        return std, nf


def _check_same_ring(*strands: GradedStrand):
    a = strands[0]
    for b in strands[1:]:
        if (b.num_vertices, b.degree, b.field) != (a.num_vertices, a.degree, a.field):
            raise InvalidArgument("strands live in different rings, degrees or fields")


def _from_rows(N: int, d: int, fld: FieldConfig, rows_by_key: dict[BlockKey, list[dict]]) -> GradedStrand:
    """Echelonise sparse rows (global column -> coefficient) block by block."""
    blocks = {}
    for key, cols in block_layout(N, d).items():
        block = StrandBlock(cols)
        sparse = rows_by_key.get(key)
        if sparse:
            local = {g: k for k, g in enumerate(cols)}
            dense = densify([{local[g]: v for g, v in r.items()} for r in sparse], len(cols), fld)
            block.pivots, block.rows = rref(dense, len(cols), fld)
            block.rows = [list(r) for r in block.rows]
        blocks[key] = block
    return GradedStrand(N, d, fld, blocks)


def ideal_strand(
    ideal: BinomialIdeal,
    d: int,
    fld: FieldConfig = GF32003,
    row_bound: int = DEFAULT_ROW_BOUND,
) -> GradedStrand:
    """Span of {g*u : g a generator, u a monomial of degree d - deg g}, echelonised."""
    if d < 0:
        raise InvalidArgument("degree must be nonnegative")
    N = ideal.num_vertices
    nv = 2 * N
    nmon = num_monomials(nv, d)
    if nmon > row_bound:
        raise TooLarge(f"degree-{d} strand in {nv} variables", nmon, row_bound)
    est = sum(num_monomials(nv, d - generator_degree(g)) for g in ideal.generators)
    if est > row_bound:
        raise TooLarge(f"degree-{d} generator rows for {ideal.label or 'ideal'}", est, row_bound)

    index = monomial_index(nv, d)
    rows_by_key: dict[BlockKey, list[dict]] = {}
    for g in ideal.generators:
        e = generator_degree(g)
        if e > d:
            continue
        terms = generator_terms(g, N)
        for u in monomials(nv, d - e):
            row = {}
            for c, t in terms:
                prod = tuple(a + b for a, b in zip(t, u))
                row[index[prod]] = c
            key = block_key(monomials(nv, d)[next(iter(row))], N)
            rows_by_key.setdefault(key, []).append(row)
    return _from_rows(N, d, fld, rows_by_key)


def hilbert_function(
    ideal: BinomialIdeal,
    d: int,
    fld: FieldConfig = GF32003,
    row_bound: int = DEFAULT_ROW_BOUND,
) -> int:
    """dim_K (S/I)_d."""
    return ideal_strand(ideal, d, fld, row_bound).codim


def hilbert_function_values(ideal, dmax, fld=GF32003, row_bound=DEFAULT_ROW_BOUND) -> list[int]:
    return [hilbert_function(ideal, d, fld, row_bound) for d in range(dmax + 1)]


def strand_sum(*strands: GradedStrand) -> GradedStrand:
    _check_same_ring(*strands)
    a = strands[0]
    blocks = {}
    for key, blk in a.blocks.items():
        stacked = [list(r) for s in strands for r in s.blocks[key].rows]
        nb = StrandBlock(blk.cols)
        if stacked:
            nb.pivots, rows = rref(stacked, len(blk.cols), a.field)
            nb.rows = [list(r) for r in rows]
        blocks[key] = nb
    return GradedStrand(a.num_vertices, a.degree, a.field, blocks)


def annihilator(s: GradedStrand) -> GradedStrand:
    """Orthogonal complement under the monomial dot product, block by block."""
    blocks = {}
    for key, blk in s.blocks.items():
        ns = nullspace(blk.pivots, blk.rows, len(blk.cols), s.field)
        nb = StrandBlock(blk.cols)
        if ns:
            nb.pivots, rows = rref(ns, len(blk.cols), s.field)
            nb.rows = [list(r) for r in rows]
        blocks[key] = nb
    return GradedStrand(s.num_vertices, s.degree, s.field, blocks)


def strand_intersection(*strands: GradedStrand) -> GradedStrand:
    """U_1 ∩ ... ∩ U_k computed as (U_1^perp + ... + U_k^perp)^perp."""
    _check_same_ring(*strands)
    return annihilator(strand_sum(*[annihilator(s) for s in strands]))


def strand_intersection_dim(u: GradedStrand, v: GradedStrand) -> int:
    return u.rank + v.rank - strand_sum(u, v).rank


def strand_contains(big: GradedStrand, small: GradedStrand) -> bool:
    return strand_sum(big, small).rank == big.rank


def same_strand(u: GradedStrand, v: GradedStrand) -> bool:
    return u.rank == v.rank and strand_sum(u, v).rank == u.rank


def strands_equal(
    a: BinomialIdeal,
    b: BinomialIdeal,
    dmax: int,
    fld: FieldConfig = GF32003,
    row_bound: int = DEFAULT_ROW_BOUND,
) -> bool:
    """Degreewise equality of two ideals for all degrees 0..dmax."""
    if a.num_vertices != b.num_vertices:
        raise InvalidArgument("ideals live in different rings")
    for d in range(dmax + 1):
        if not same_strand(ideal_strand(a, d, fld, row_bound), ideal_strand(b, d, fld, row_bound)):
            return False
    return True


def rank_of(rows: list[list], ncols: int, fld: FieldConfig) -> int:
    return _rank([list(r) for r in rows], ncols, fld)
