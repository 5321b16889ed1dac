"""Graded Betti numbers of S/I from the Koszul complex on all 2N variables.

beta_{i,j}(S/I) = dim H_i(x; S/I)_{i+j}.  The complex in internal degree
i+j is

    L^{i+1} (x) (S/I)_{j-1}  ->  L^i (x) (S/I)_j  ->  L^{i-1} (x) (S/I)_{j+1}

with L^k the k-th exterior power of the 2N-dimensional span of the
variables.  (S/I)_j is represented by the standard (non-pivot) monomials of
the echelonised ideal strand, and images are reduced into it with
:meth:`GradedStrand.normal_forms`.  Only those slices are ever built and each
one is split by multidegree before elimination.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from ..errors import InvalidArgument, TooLarge
from ..ideals import BinomialIdeal
from ..series import BettiTable
from .linalg import FieldConfig, GF32003, densify, rank
from .strands import DEFAULT_ROW_BOUND, block_key, ideal_strand, monomial_index, monomials, num_monomials


@dataclass
class _Quotient:
    std: list[int]                 # global monomial index of each quotient basis element
    nf: dict[int, list]            # global monomial index -> [(quotient position, coeff)]


@dataclass
class KoszulComplex:
    """Caches quotient strands and differential ranks for one ideal over one field."""

    ideal: BinomialIdeal
    fld: FieldConfig = GF32003
    row_bound: int = DEFAULT_ROW_BOUND
    _quot: dict[int, _Quotient] = field(default_factory=dict, repr=False)
    _ranks: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    @property
    def nvars(self) -> int:
        return self.ideal.num_vars

    def quotient(self, j: int) -> _Quotient:
        if j not in self._quot:
            strand = ideal_strand(self.ideal, j, self.fld, self.row_bound)
            std_pos, nf = strand.normal_forms()
            if not self.fld.characteristic:
                nf = {g: [(pos, int(c) if c.denominator == 1 else c) for pos, c in terms]
                      for g, terms in nf.items()}
            std = sorted(std_pos, key=std_pos.get)
            self._quot[j] = _Quotient(std, nf)
        return self._quot[j]

    def hilbert(self, j: int) -> int:
        return len(self.quotient(j).std) if j >= 0 else 0

    def chain_dim(self, i: int, j: int) -> int:
        if i < 0 or i > self.nvars or j < 0:
            return 0
        return comb(self.nvars, i) * self.hilbert(j)

    def _guard(self, i: int, j: int):
        est = comb(self.nvars, i) * num_monomials(self.nvars, j)
        if est > self.row_bound:
            raise TooLarge(f"Koszul slice L^{i} (x) S_{j} in {self.nvars} variables", est, self.row_bound)

    def differential_rank(self, i: int, j: int) -> int:
        """Rank of d_i restricted to L^i (x) (S/I)_j."""
        if i <= 0 or i > self.nvars or j < 0:
            return 0
        key = (i, j)
        if key in self._ranks:
            return self._ranks[key]
        self._guard(i, j)
        N = self.ideal.num_vertices
        nv = self.nvars
        src = self.quotient(j)
        dst = self.quotient(j + 1)
        mons_j = monomials(nv, j)
        idx_next = monomial_index(nv, j + 1)

        def var_key(k):
            return k % N, 1 if k < N else 0

        var_keys = [var_key(k) for k in range(nv)]
        rows_by_key: dict = {}
        for S in combinations(range(nv), i):
            shift = [0] * N
            xs = 0
            for k in S:
                v, isx = var_keys[k]
                shift[v] += 1
                xs += isx
            for u_idx in src.std:
                u = mons_j[u_idx]
                vert, ux = block_key(u, N)
                bkey = (tuple(a + b for a, b in zip(vert, shift)), ux + xs)
                row: dict = {}
                for t, s in enumerate(S):
                    sign = -1 if t % 2 else 1
                    face = S[:t] + S[t + 1:]
                    bumped = list(u)
                    bumped[s] += 1
                    for pos, c in dst.nf[idx_next[tuple(bumped)]]:
                        col = (face, pos)
                        row[col] = row.get(col, 0) + sign * c
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows_by_key.setdefault(bkey, []).append(row)

        total = 0
        for rows in rows_by_key.values():
            cols = {}
            for r in rows:
                for c in r:
                    if c not in cols:
                        cols[c] = len(cols)
            dense = densify([{cols[c]: v for c, v in r.items()} for r in rows], len(cols), self.fld)
            total += rank(dense, len(cols), self.fld)
        self._ranks[key] = total
        return total

    def betti(self, i: int, j: int) -> int:
        if i < 0 or j < 0:
            raise InvalidArgument("Betti indices must be nonnegative")
        if i > self.nvars:
            return 0
        dim = self.chain_dim(i, j)
        if dim == 0:
            return 0
        return dim - self.differential_rank(i, j) - self.differential_rank(i + 1, j - 1)

    def table(self, max_strand: int) -> BettiTable:
        entries = {}
        for j in range(max_strand + 1):
            for i in range(self.nvars + 1):
                v = self.betti(i, j)
                if v:
                    entries[(i, j)] = v
        return BettiTable(self.nvars, entries)


@lru_cache(maxsize=64)
def _complex(ideal: BinomialIdeal, fld: FieldConfig, row_bound: int) -> KoszulComplex:
    return KoszulComplex(ideal, fld, row_bound)


def koszul_betti(
    ideal: BinomialIdeal,
    i: int,
    j: int,
    fld: FieldConfig = GF32003,
    row_bound: int = DEFAULT_ROW_BOUND,
) -> int:
    """dim_K Tor_i(K, S/I)_{i+j}."""
    return _complex(ideal, fld, row_bound).betti(i, j)


class TruncatedTable(Exception):
    """The top computed strand is nonzero, so higher strands may be missing."""


@dataclass
class OracleBetti:
    table: BettiTable
    max_strand: int

    def _require_complete(self):
        top = self.table.strand(self.max_strand)
        if top:
            raise TruncatedTable(
                f"strand {self.max_strand} is nonzero ({top}); compute more strands before reading off invariants"
            )

    @property
    def proj_dim(self) -> int:
        self._require_complete()
        return self.table.proj_dim

    @property
    def regularity(self) -> int:
        self._require_complete()
        return self.table.regularity


def oracle_betti_table(
    ideal: BinomialIdeal,
    max_strand: int = 3,
    fld: FieldConfig = GF32003,
    row_bound: int = DEFAULT_ROW_BOUND,
) -> OracleBetti:
    """All beta_{i,j} with 0 <= i <= 2N and 0 <= j <= max_strand."""
    return OracleBetti(_complex(ideal, fld, row_bound).table(max_strand), max_strand)


def depth_via_ab(ideal: BinomialIdeal, fld: FieldConfig = GF32003, max_strand: int = 3,
                 row_bound: int = DEFAULT_ROW_BOUND) -> int:
    """2N minus the projective dimension (Auslander-Buchsbaum)."""
    return ideal.num_vars - oracle_betti_table(ideal, max_strand, fld, row_bound).proj_dim


def regularity_via_betti(ideal: BinomialIdeal, fld: FieldConfig = GF32003, max_strand: int = 3,
                         row_bound: int = DEFAULT_ROW_BOUND) -> int:
    return oracle_betti_table(ideal, max_strand, fld, row_bound).regularity
