"""The ten acceptance criteria, one test each, all at exact tolerance.

Each test prints a single ``criterion N: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary.
"""
import io
import time

from binedge import closed_form as cf
from binedge.cli import main
from binedge.graphs import complete_bipartite
from binedge.ideals import edge_binomials, krull_dim_from_primes
from binedge.oracle import GF32003, QQ, KoszulComplex, depth_via_ab, hilbert_function_values
from binedge.series import reduce_pole_order, series_from_betti
from binedge.verify import check_decomposition, check_series_additivity, pairs_box, pairs_up_to

BETTI_PAIRS = [(1, 1), (2, 1), (3, 1), (2, 2)]
TIMINGS: dict[str, float] = {}


def J(m, n):
    return edge_binomials(complete_bipartite(m, n))


def hilbert_agreement(fld):
    """Criterion 1 over ``fld``: list of mismatches."""
    bad = []
    for m, n in pairs_up_to(5):
        got = hilbert_function_values(J(m, n), 6, fld)
        want = cf.hilbert_series(m, n).expand(6)
        if got != want:
            bad.append(((m, n), got, want))
    return bad


def betti_agreement(fld):
    """Criterion 2 over ``fld``: fresh Koszul complexes, strands 0..3."""
    tables, bad = {}, []
    for m, n in BETTI_PAIRS:
        got = KoszulComplex(J(m, n), fld).table(3)
        tables[(m, n)] = got
        if got != cf.betti_table(m, n) or got[(2, 1)] != 0 or any(j >= 3 for _, j in got.entries):
            bad.append(((m, n), got.diff(cf.betti_table(m, n))))
    return tables, bad


def test_criterion_01_hilbert_function(report):
    t = time.perf_counter()
    bad = hilbert_agreement(GF32003)
    dt = time.perf_counter() - t
    TIMINGS["c1"] = dt
    report(1, not bad and dt < 30, f"Hilbert function, {len(pairs_up_to(5))} pairs with m+n<=5, d<=6, {dt:.2f}s {bad or ''}")


def test_criterion_02_betti_tables(report):
    t = time.perf_counter()
    tables, bad = betti_agreement(GF32003)
    dt = time.perf_counter() - t
    TIMINGS["c2"] = dt
    TIMINGS["tables"] = tables
    report(2, not bad and dt < 180, f"Betti tables {BETTI_PAIRS} over GF(32003), beta_2,1 = 0, strand 3 zero, {dt:.2f}s {bad or ''}")


def test_criterion_03_dimension(report):
    t = time.perf_counter()
    bad = [(m, n) for m, n in pairs_up_to(8)
           if krull_dim_from_primes(complete_bipartite(m, n)) != max(n + m + 1, 2 * m)]
    dt = time.perf_counter() - t
    report(3, not bad and dt < 1, f"dimension from minimal primes, {len(pairs_up_to(8))} pairs with m+n<=8, {dt:.2f}s {bad or ''}")


def test_criterion_04_depth(report):
    # depth_via_ab refuses tables whose top strand is nonzero, so a truncated table cannot pass
    got = {(m, n): depth_via_ab(J(m, n), GF32003) for m, n in BETTI_PAIRS}
    want = {(m, n): (m + 2 if n == 1 else n + 2) for m, n in BETTI_PAIRS}
    report(4, got == want, f"depth via Auslander-Buchsbaum {got}")


def test_criterion_05_multiplicity(report):
    t = time.perf_counter()
    bad = []
    for m, n in pairs_box(12):
        r, d = reduce_pole_order(cf.hilbert_series(m, n))
        if (d, sum(r)) != (cf.krull_dim(m, n), cf.multiplicity(m, n)):
            bad.append((m, n))
    spot = {mn: sum(reduce_pole_order(cf.hilbert_series(*mn))[0]) for mn in [(5, 2), (2, 2), (3, 1)]}
    dt = time.perf_counter() - t
    ok = not bad and spot == {(5, 2): 1, (2, 2): 4, (3, 1): 1} and dt < 1
    report(5, ok, f"pole order = dim and R(1) = e for n<=m<=12, e spot values {spot}, {dt:.2f}s {bad or ''}")


def test_criterion_06_resolution_series(report):
    t = time.perf_counter()
    bad = [(m, n) for m, n in pairs_box(10)
           if series_from_betti(cf.betti_table(m, n)).canonical() != cf.hilbert_series(m, n).canonical()]
    dt = time.perf_counter() - t
    report(6, not bad and dt < 1, f"series from Betti table = Hilbert series for n<=m<=10, {dt:.2f}s {bad or ''}")


def test_criterion_07_decomposition(report):
    t = time.perf_counter()
    strands = check_decomposition(5, 6, GF32003)
    series = check_series_additivity(5, 6)
    dt = time.perf_counter() - t
    ok = strands.passed and series.passed and dt < 60
    report(7, ok, f"decomposition identities m+n<=5, d<=6: {strands.detail}; series additivity: {series.detail}; {dt:.2f}s")


def test_criterion_08_deficiency(report):
    t = time.perf_counter()
    sizes = {cf.STAR: 2, cf.GENERIC: 5, cf.NEXT: 4, cf.N_TWO: 4, cf.TWICE: 4}
    bad, classified = [], 0
    for m, n in pairs_up_to(14):
        rep = cf.deficiency_classification(m, n)
        idx = rep.nonvanishing_indices
        if idx is None:
            continue
        classified += 1
        if (min(idx), max(idx)) != (cf.depth(m, n), cf.krull_dim(m, n)) or len(set(idx)) != sizes[rep.case_label]:
            bad.append((m, n, rep.case_label, idx))
    dt = time.perf_counter() - t
    report(8, not bad and classified > 0 and dt < 1,
           f"{classified} classified pairs with m+n<=14: min = depth, max = dim, index-set sizes, {dt:.2f}s {bad or ''}")


def test_criterion_09_field_independence(report):
    gf_tables = TIMINGS.get("tables") or betti_agreement(GF32003)[0]
    c2 = TIMINGS.get("c2")
    if c2 is None:
        t = time.perf_counter()
        betti_agreement(GF32003)
        c2 = time.perf_counter() - t
    t = time.perf_counter()
    bad1 = hilbert_agreement(QQ)
    qq_tables, bad2 = betti_agreement(QQ)
    dt = time.perf_counter() - t
    same = qq_tables == gf_tables
    ratio = dt / c2
    report(9, not bad1 and not bad2 and same and ratio <= 3,
           f"criteria 1-2 over QQ identical to GF(32003); QQ rerun {dt:.2f}s = {ratio:.2f}x criterion 2 ({c2:.2f}s)")


def _verify(*extra, size="2"):
    out, err = io.StringIO(), io.StringIO()
    return main(["verify", "--max-size", size, "--max-degree", "6", *extra], out, err), err.getvalue()


def test_criterion_10_negative_control(report):
    clean, _ = _verify()
    headline, diff = _verify("--perturb-betti", "2", "2", "1", size="4")
    missed = []
    for i in range(9):
        for j in range(4):
            for delta in (1, -1):
                code, _ = _verify("--perturb-betti", str(i), str(j), str(delta))
                if code == 0:
                    missed.append(("betti", i, j, delta))
    for d in range(7):
        for delta in (1, -1):
            code, _ = _verify("--perturb-series", str(d), str(delta))
            if code == 0:
                missed.append(("series", d, delta))
    ok = clean == 0 and headline == 1 and "(2, 2)" in diff and not missed
    report(10, ok, f"unperturbed exit {clean}; wrong beta_2,2 exit {headline}; "
                   f"{9 * 4 * 2 + 7 * 2} single-entry perturbations, missed {missed or 'none'}")
