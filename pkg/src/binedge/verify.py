"""Closed form versus oracle comparisons, shared by ``binedge verify`` and the test suite.

Each ``check_*`` function returns a :class:`Check`; ``run_suite`` strings them
together for every pair m >= n >= 1 with m + n up to a size limit.  A
:class:`Perturbation` corrupts the closed-form side on purpose, to prove the
comparisons can fail.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from . import closed_form as cf
from .errors import InvalidArgument
from .graphs import complete_bipartite
from .ideals import (
    edge_binomials,
    intersection_graph_ideal,
    krull_dim_from_primes,
    minimal_prime_ideals,
    minor_ideal,
    variable_ideal,
)
from .oracle import (
    GF32003,
    FieldConfig,
    KoszulComplex,
    hilbert_function_values,
    ideal_strand,
    same_strand,
    strand_contains,
    strand_intersection,
    strand_sum,
)
from .oracle.strands import DEFAULT_ROW_BOUND, num_monomials
from .series import BettiTable, HilbertSeries, reduce_pole_order, series_from_betti


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name} ({self.seconds:.2f}s){': ' + self.detail if self.detail else ''}"

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class Perturbation:
    """Deliberate corruption of closed-form values (negative controls)."""

    betti: dict[tuple[int, int], int] = field(default_factory=dict)
    series: dict[int, int] = field(default_factory=dict)

    def apply_betti(self, table: BettiTable) -> BettiTable:
        if not self.betti:
            return table
        entries = dict(table.entries)
        for k, delta in self.betti.items():
            entries[k] = entries.get(k, 0) + delta
        # a negative entry raises InvalidArgument; the checks report that as a failure
        return BettiTable(table.num_vars, entries)

    def apply_coefficients(self, coeffs: list[int]) -> list[int]:
        out = list(coeffs)
        for d, delta in self.series.items():
            if d < len(out):
                out[d] += delta
        return out


NO_PERTURBATION = Perturbation()


def pairs_up_to(size: int, min_size: int = 2) -> list[tuple[int, int]]:
    """All (m, n) with m >= n >= 1 and min_size <= m + n <= size."""
    return [(m, s - m) for s in range(min_size, size + 1) for m in range(s - 1, 0, -1) if m >= s - m]


def pairs_box(mmax: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(1, mmax + 1) for n in range(1, m + 1)]


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    ok, detail = fn()
    return Check(name, ok, detail, time.perf_counter() - t0)


def _first_failure(items: Iterable[tuple[bool, str]]) -> tuple[bool, str]:
    count = 0
    for ok, what in items:
        count += 1
        if not ok:
            return False, what
    return True, f"{count} comparisons"


# --- criteria ---------------------------------------------------------------

def check_hilbert(size: int, max_degree: int, fld: FieldConfig = GF32003,
                  perturb: Perturbation = NO_PERTURBATION, row_bound: int = DEFAULT_ROW_BOUND) -> Check:
    def items():
        for m, n in pairs_up_to(size):
            ideal = edge_binomials(complete_bipartite(m, n))
            oracle = hilbert_function_values(ideal, max_degree, fld, row_bound)
            closed = perturb.apply_coefficients(cf.hilbert_series(m, n).expand(max_degree))
            yield oracle == closed, f"K_{m},{n}: oracle {oracle} vs closed form {closed}"

    return _timed(f"hilbert function, m+n<={size}, d<={max_degree}, {fld}", lambda: _first_failure(items()))


def oracle_table(m: int, n: int, fld: FieldConfig = GF32003, max_strand: int = 3,
                 row_bound: int = DEFAULT_ROW_BOUND) -> BettiTable:
    ideal = edge_binomials(complete_bipartite(m, n))
    return KoszulComplex(ideal, fld, row_bound).table(max_strand)


def check_betti(pairs, fld: FieldConfig = GF32003, perturb: Perturbation = NO_PERTURBATION,
                max_strand: int = 3, row_bound: int = DEFAULT_ROW_BOUND,
                tables: dict | None = None) -> Check:
    """Oracle Betti tables (strands 0..max_strand) against the closed form, entry by entry."""
    def items():
        for m, n in pairs:
            got = oracle_table(m, n, fld, max_strand, row_bound)
            if tables is not None:
                tables[(m, n)] = got
            try:
                want = perturb.apply_betti(cf.betti_table(m, n))
            except InvalidArgument as e:
                yield False, f"K_{m},{n}: closed form claims {e}"
                continue
            # closed-form entries beyond the computed strands cannot be compared
            want = BettiTable(want.num_vars, {k: v for k, v in want.entries.items() if k[1] <= max_strand})
            diff = got.diff(want)
            yield not diff, f"K_{m},{n}: (i,j): (oracle, closed form) {diff}"
            yield got[(2, 1)] == 0, f"K_{m},{n}: beta_2,1 = {got[(2, 1)]}"
            high = {k: v for k, v in got.entries.items() if k[1] >= 3}
            yield not high, f"K_{m},{n}: nonzero strands >= 3: {high}"

    label = ",".join(f"K_{m},{n}" for m, n in pairs)
    return _timed(f"betti tables {label}, strands<={max_strand}, {fld}", lambda: _first_failure(items()))


def check_depth_reg(pairs, fld: FieldConfig = GF32003, max_strand: int = 3,
                    row_bound: int = DEFAULT_ROW_BOUND, tables: dict | None = None) -> Check:
    """Depth by Auslander-Buchsbaum and regularity, both read off the oracle table."""
    def items():
        for m, n in pairs:
            t = tables[(m, n)] if tables and (m, n) in tables else oracle_table(m, n, fld, max_strand, row_bound)
            top = t.strand(max_strand)
            yield not top, f"K_{m},{n}: strand {max_strand} nonzero, table may be truncated"
            d = t.num_vars - t.proj_dim
            yield d == cf.depth(m, n), f"K_{m},{n}: depth via AB {d} vs {cf.depth(m, n)}"
            yield t.regularity == cf.regularity(m, n), f"K_{m},{n}: reg {t.regularity} vs {cf.regularity(m, n)}"

    return _timed(f"depth (Auslander-Buchsbaum) and regularity, {fld}", lambda: _first_failure(items()))


def check_dimension(size: int = 8) -> Check:
    def items():
        for m, n in pairs_up_to(size):
            got = krull_dim_from_primes(complete_bipartite(m, n))
            yield got == max(n + m + 1, 2 * m) == cf.krull_dim(m, n), f"K_{m},{n}: {got}"

    return _timed(f"dimension from minimal primes, m+n<={size}", lambda: _first_failure(items()))


def check_multiplicity(mmax: int = 12) -> Check:
    def items():
        for m, n in pairs_box(mmax):
            r, d = reduce_pole_order(cf.hilbert_series(m, n))
            yield (d, sum(r)) == (cf.krull_dim(m, n), cf.multiplicity(m, n)), f"K_{m},{n}: (order, e) = {(d, sum(r))}"

    return _timed(f"pole order and multiplicity, n<=m<={mmax}", lambda: _first_failure(items()))


def check_resolution_series(mmax: int = 10, perturb: Perturbation = NO_PERTURBATION) -> Check:
    def items():
        for m, n in pairs_box(mmax):
            try:
                from_res = series_from_betti(perturb.apply_betti(cf.betti_table(m, n)))
            except InvalidArgument as e:
                yield False, f"K_{m},{n}: closed form claims {e}"
                continue
            closed = cf.hilbert_series(m, n)
            yield from_res.canonical() == closed.canonical(), f"K_{m},{n}: {from_res.pretty()} vs {closed.pretty()}"

    return _timed(f"resolution vs series identity, n<=m<={mmax}", lambda: _first_failure(items()))


def check_decomposition(size: int, max_degree: int, fld: FieldConfig = GF32003,
                        row_bound: int = DEFAULT_ROW_BOUND) -> Check:
    """Minimal-prime intersection, the ideal-sum identity and Hilbert additivity, degree by degree."""
    def items():
        for m, n in pairs_up_to(size):
            g = complete_bipartite(m, n)
            N = m + n
            jg = edge_binomials(g)
            jt = minor_ideal(list(range(1, N + 1)), N)
            a = variable_ideal(range(1, n + 1), N, "A_n")
            primes = [p for _, p in minimal_prime_ideals(g)]
            for d in range(max_degree + 1):
                s = lambda ideal: ideal_strand(ideal, d, fld, row_bound)  # noqa: E731
                sj, st, sa = s(jg), s(jt), s(a)
                yield same_strand(sj, strand_intersection(*[s(p) for p in primes])), \
                    f"K_{m},{n} d={d}: J_G differs from the intersection of its minimal primes"
                ta = strand_intersection(st, sa)
                yield same_strand(ta, s(intersection_graph_ideal(m, n, "P2"))), \
                    f"K_{m},{n} d={d}: J~ cap A_n is not the edge ideal of K_N minus the P2 edges"
                # 0 -> S/(J~ cap A) -> S/J~ + S/A -> S/(J~ + A) -> 0
                yield ta.codim == st.codim + sa.codim - strand_sum(st, sa).codim, \
                    f"K_{m},{n} d={d}: Hilbert additivity for J~ cap A_n"
                if n == 1:
                    yield same_strand(sj, ta), f"K_{m},{n} d={d}: J_G != J~ cap A_1"
                    continue
                b = variable_ideal(range(n + 1, N + 1), N, "B_m")
                sb = s(b)
                tb = strand_intersection(st, sb)
                yield same_strand(tb, s(intersection_graph_ideal(m, n, "P1"))), \
                    f"K_{m},{n} d={d}: J~ cap B_m is not the edge ideal of K_N minus the P1 edges"
                yield same_strand(strand_sum(ta, tb), st), f"K_{m},{n} d={d}: (J~ cap A, J~ cap B) != J~"
                # the same for B_m, then 0 -> S/J_G -> S/(J~ cap A) + S/(J~ cap B) -> S/J~ -> 0
                yield tb.codim == st.codim + sb.codim - strand_sum(st, sb).codim, \
                    f"K_{m},{n} d={d}: Hilbert additivity for J~ cap B_m"
                yield sj.codim + st.codim == ta.codim + tb.codim, \
                    f"K_{m},{n} d={d}: Hilbert additivity for J_G"

    return _timed(f"decomposition identities, m+n<={size}, d<={max_degree}, {fld}",
                  lambda: _first_failure(items()))


def check_primes_contain_edges(size: int, fld: FieldConfig = GF32003) -> Check:
    def items():
        for m, n in pairs_up_to(size):
            g = complete_bipartite(m, n)
            sj = ideal_strand(edge_binomials(g), 2, fld)
            for pc, p in minimal_prime_ideals(g):
                yield strand_contains(ideal_strand(p, 2, fld), sj), f"K_{m},{n}: J_G not inside {p.label}"

    return _timed(f"edge binomials lie in every minimal prime, m+n<={size}", lambda: _first_failure(items()))


def check_deficiency(size: int = 14) -> Check:
    expected_sizes = {cf.STAR: 2, cf.NEXT: 4, cf.N_TWO: 4, cf.TWICE: 4, cf.GENERIC: 5}

    def items():
        for m, n in pairs_up_to(size):
            rep = cf.deficiency_classification(m, n)
            if rep.case_label == cf.SMALL:
                continue
            idx = rep.nonvanishing_indices
            yield min(idx) == cf.depth(m, n), f"K_{m},{n}: min index {min(idx)} vs depth {cf.depth(m, n)}"
            yield max(idx) == cf.krull_dim(m, n), f"K_{m},{n}: max index {max(idx)} vs dim {cf.krull_dim(m, n)}"
            yield len(idx) == len(set(idx)) == expected_sizes[rep.case_label], f"K_{m},{n}: indices {idx}"
            for r in rep.rows:
                yield r.depth <= r.dim <= r.index, f"K_{m},{n}: row {r}"

    return _timed(f"deficiency classifier consistency, m+n<={size}", lambda: _first_failure(items()))


def check_series_additivity(size: int = 6, dmax: int = 10) -> Check:
    """The three short exact sequences as identities of closed-form series pieces."""
    def items():
        for m, n in pairs_up_to(size):
            N = m + n
            jt = cf.complete_graph_hilbert_series(N)
            # S/A_n is a polynomial ring in the 2m variables of P2; S/(J~, A_n) is the
            # complete-graph quotient on those same variables (likewise for B_m)
            sa = HilbertSeries.of([1], 2 * m)
            ja = cf.complete_graph_hilbert_series(m)
            t_a = jt + sa - ja
            if n == 1:
                rhs = t_a
            else:
                sb = HilbertSeries.of([1], 2 * n)
                jb = cf.complete_graph_hilbert_series(n)
                rhs = t_a + (jt + sb - jb) - jt
            yield rhs.expand(dmax) == cf.hilbert_series(m, n).expand(dmax), f"K_{m},{n}"

    return _timed(f"short exact sequence additivity of series, m+n<={size}, d<={dmax}",
                  lambda: _first_failure(items()))


# --- orchestration ----------------------------------------------------------

def suite_resource_estimate(size: int, max_degree: int, betti_size: int = 4, max_strand: int = 3) -> int:
    """Largest strand (rows) the suite would build, computed without building anything."""
    nv = 2 * size
    est = num_monomials(nv, max_degree)
    bn = 2 * min(size, betti_size)
    for i in range(bn + 1):
        for j in range(max_strand + 2):
            est = max(est, comb(bn, i) * num_monomials(bn, j))
    return est


def run_suite(size: int = 4, max_degree: int = 6, fld: FieldConfig = GF32003,
              perturb: Perturbation = NO_PERTURBATION, betti_size: int = 4,
              row_bound: int = DEFAULT_ROW_BOUND, progress: Callable[[Check], None] | None = None) -> list[Check]:
    betti_pairs = pairs_up_to(min(size, betti_size))
    tables: dict = {}
    steps = [
        lambda: check_hilbert(size, max_degree, fld, perturb, row_bound),
        lambda: check_betti(betti_pairs, fld, perturb, row_bound=row_bound, tables=tables),
        lambda: check_dimension(max(size, 8)),
        lambda: check_depth_reg(betti_pairs, fld, row_bound=row_bound, tables=tables),
        lambda: check_multiplicity(12),
        lambda: check_resolution_series(10, perturb),
        lambda: check_decomposition(min(size, 5), max_degree, fld, row_bound),
        lambda: check_primes_contain_edges(min(size, 6), fld),
        lambda: check_series_additivity(6, 10),
        lambda: check_deficiency(max(size, 14)),
    ]
    out = []
    for step in steps:
        c = step()
        out.append(c)
        if progress:
            progress(c)
    return out
