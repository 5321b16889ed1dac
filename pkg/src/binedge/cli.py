"""Invariants of binomial edge ideals of K_{m,n}: closed forms and an exact oracle.

    binedge invariants --m 3 --n 2
    binedge hilbert --m 2 --n 2 --max-degree 8 --oracle
    binedge betti --m 3 --n 1 --oracle --format json
    binedge verify --max-size 4 --max-degree 6

Exit codes: 0 success, 1 a requested comparison failed, 2 invalid arguments,
3 the oracle refused a strand above ``--strand-row-bound``.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

from . import closed_form as cf
from .errors import InvalidArgument, TooLarge, Unsupported
from .graphs import complete_bipartite
from .ideals import edge_binomials, minimal_primes
from .oracle import DEFAULT_ROW_BOUND, FieldConfig, hilbert_function_values
from .oracle.koszul import KoszulComplex
from .series import BettiTable, HilbertSeries
from .verify import Perturbation, run_suite, suite_resource_estimate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


@dataclass
class RunConfig:
    m: int
    n: int
    max_degree: int = 6
    field: int = 32003
    format: str = "text"
    strand_row_bound: int = DEFAULT_ROW_BOUND
    oracle: bool = False
    swapped: bool = False

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        m, n = args.m, args.n
        if m is None or n is None:
            raise InvalidArgument("--m and --n are required")
        if m < 1 or n < 1:
            raise InvalidArgument(f"part sizes must be positive, got ({m}, {n})")
        if args.max_degree < 0:
            raise InvalidArgument("--max-degree must be >= 0")
        g = complete_bipartite(m, n)
        m, n = g.part_sizes
        FieldConfig(args.field)
        return cls(m, n, args.max_degree, args.field, args.format, args.strand_row_bound,
                   getattr(args, "oracle", False), g.swapped)

    @property
    def fld(self) -> FieldConfig:
        return FieldConfig(self.field)


@dataclass
class FullReport:
    """Everything the closed form says about one K_{m,n}; the json schema of ``invariants``."""

    invariants: cf.InvariantReport
    series: HilbertSeries
    betti: BettiTable
    deficiency: cf.DeficiencyReport

    @classmethod
    def build(cls, m: int, n: int) -> "FullReport":
        return cls(cf.invariants(m, n), cf.hilbert_series(m, n), cf.betti_table(m, n),
                   cf.deficiency_classification(m, n))

    def to_dict(self) -> dict:
        d = self.invariants.to_dict()
        d["hilbert_numerator"] = list(self.series.numerator)
        d["denom_power"] = self.series.denom_power
        d["betti"] = self.betti.as_triples()
        d["deficiency"] = self.deficiency.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FullReport":
        inv = cf.InvariantReport.from_dict(d)
        return cls(
            inv,
            HilbertSeries.of(d["hilbert_numerator"], d["denom_power"]),
            BettiTable.from_triples(2 * (inv.m + inv.n), d["betti"]),
            cf.DeficiencyReport.from_dict(inv.m, inv.n, d["deficiency"]),
        )


def _emit(cfg: RunConfig, payload: dict, text: str, out) -> None:
    if cfg.format == "json":
        if cfg.swapped:
            payload = {**payload, "swapped": True}
        out.write(json.dumps(payload) + "\n")
    else:
        if cfg.swapped:
            text = f"(input parts swapped: reporting K_{{{cfg.m},{cfg.n}}} with m >= n)\n" + text
        out.write(text.rstrip("\n") + "\n")


def cmd_invariants(cfg: RunConfig, out=sys.stdout) -> int:
    rep = FullReport.build(cfg.m, cfg.n)
    inv = rep.invariants
    text = "\n".join([
        f"K_{{{cfg.m},{cfg.n}}}",
        f"dim           {inv.dim}",
        f"depth         {inv.depth}",
        f"reg           {inv.reg}",
        f"multiplicity  {inv.multiplicity}",
        f"pd            {inv.pd}",
        f"minimal primes {inv.num_minimal_primes}",
    ])
    _emit(cfg, rep.to_dict(), text, out)
    return EXIT_OK


def cmd_primes(cfg: RunConfig, out=sys.stdout) -> int:
    primes = minimal_primes(complete_bipartite(cfg.m, cfg.n))
    lines = [f"K_{{{cfg.m},{cfg.n}}}: {len(primes)} minimal primes"]
    for pc in primes:
        comps = " ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in pc.components)
        lines.append(f"T={{{','.join(map(str, sorted(pc.cut_set)))}}}  components {comps}  height {pc.height}  dim {pc.dim}")
    payload = {"m": cfg.m, "n": cfg.n, "minimal_primes": len(primes), "primes": [p.to_dict() for p in primes]}
    _emit(cfg, payload, "\n".join(lines), out)
    return EXIT_OK


def cmd_hilbert(cfg: RunConfig, out=sys.stdout) -> int:
    s = cf.hilbert_series(cfg.m, cfg.n)
    coeffs = s.expand(cfg.max_degree)
    payload = {"m": cfg.m, "n": cfg.n, "hilbert_numerator": list(s.numerator), "denom_power": s.denom_power,
               "coefficients": coeffs}
    lines = [f"H(t) = {s.pretty()}", f"reduced: {s.canonical().pretty()}", f"coefficients d=0..{cfg.max_degree}: {coeffs}"]
    code = EXIT_OK
    if cfg.oracle:
        ideal = edge_binomials(complete_bipartite(cfg.m, cfg.n))
        got = hilbert_function_values(ideal, cfg.max_degree, cfg.fld, cfg.strand_row_bound)
        match = got == coeffs
        payload.update(oracle=got, match=match, field=cfg.field)
        lines.append(f"oracle over {cfg.fld}:    {got}")
        lines.append("match" if match else "MISMATCH")
        code = EXIT_OK if match else EXIT_FAIL
    _emit(cfg, payload, "\n".join(lines), out)
    return code


def cmd_betti(cfg: RunConfig, out=sys.stdout, max_strand: int = 3) -> int:
    table = cf.betti_table(cfg.m, cfg.n)
    payload = {"m": cfg.m, "n": cfg.n, "betti": table.as_triples(), "pd": table.proj_dim}
    lines = [table.render(min_strands=3)]
    code = EXIT_OK
    if cfg.oracle:
        ideal = edge_binomials(complete_bipartite(cfg.m, cfg.n))
        got = KoszulComplex(ideal, cfg.fld, cfg.strand_row_bound).table(max_strand)
        diff = got.diff(table)
        payload.update(oracle_betti=got.as_triples(), diff=[[i, j, a, b] for (i, j), (a, b) in diff.items()],
                       match=not diff, field=cfg.field)
        lines.append(f"oracle over {cfg.fld}, strands 0..{max_strand}:")
        lines.append(got.render(min_strands=3))
        if diff:
            lines.append("MISMATCH (i, j): oracle vs closed form")
            lines += [f"  ({i}, {j}): {a} vs {b}" for (i, j), (a, b) in diff.items()]
        else:
            lines.append("match")
        code = EXIT_FAIL if diff else EXIT_OK
    _emit(cfg, payload, "\n".join(lines), out)
    return code


def cmd_deficiency(cfg: RunConfig, out=sys.stdout) -> int:
    rep = cf.deficiency_classification(cfg.m, cfg.n)
    lines = [f"K_{{{cfg.m},{cfg.n}}}: case {rep.case_label}"]
    if rep.nonvanishing_indices is not None:
        lines.append(f"nonvanishing indices {rep.nonvanishing_indices}")
        lines.append("   i  depth  dim  module")
        lines += [f"{r.index:4d}  {r.depth:5d}  {r.dim:3d}  {r.description}" for r in rep.rows]
    else:
        lines.append("no explicit table for this pair")
    lines.append(f"Cohen-Macaulay {rep.cohen_macaulay}, sequentially CM {rep.sequentially_cm}, "
                 f"canonically CM {rep.canonically_cm}")
    _emit(cfg, {"m": cfg.m, "n": cfg.n, "deficiency": rep.to_dict()}, "\n".join(lines), out)
    return EXIT_OK


def cmd_verify(args, out=sys.stdout, err=sys.stderr) -> int:
    size, dmax = args.max_size, args.max_degree
    if size < 2:
        raise InvalidArgument("--max-size must be at least 2")
    if dmax < 0:
        raise InvalidArgument("--max-degree must be >= 0")
    fld = FieldConfig(args.field)
    est = suite_resource_estimate(size, dmax)
    if est > args.strand_row_bound:
        raise TooLarge(f"verify --max-size {size} --max-degree {dmax}", est, args.strand_row_bound)
    for d, _ in args.perturb_series or []:
        if not 0 <= d <= dmax:
            raise InvalidArgument(f"--perturb-series degree {d} is outside 0..{dmax} and would never be compared")
    for i, j, _ in args.perturb_betti or []:
        if i < 0 or j < 0:
            raise InvalidArgument("--perturb-betti indices must be nonnegative")
    perturb = Perturbation(
        betti={(i, j): delta for i, j, delta in (args.perturb_betti or [])},
        series={d: delta for d, delta in (args.perturb_series or [])},
    )

    def progress(c):
        if args.format == "text":
            out.write(c.line() + "\n")
            out.flush()

    checks = run_suite(size, dmax, fld, perturb, row_bound=args.strand_row_bound, progress=progress)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        out.write(json.dumps({"max_size": size, "max_degree": dmax, "field": args.field, "passed": ok,
                              "checks": [c.to_dict() for c in checks]}) + "\n")
    else:
        out.write(("all checks passed" if ok else "VERIFICATION FAILED") + "\n")
    for c in checks:
        if not c.passed:
            err.write(f"failed: {c.name}: {c.detail}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="size of the larger part")
    common.add_argument("--n", type=int, help="size of the smaller part")
    common.add_argument("--max-degree", type=int, default=6)
    common.add_argument("--field", type=int, default=32003, help="0 for the rationals, else a prime")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--strand-row-bound", type=int, default=DEFAULT_ROW_BOUND)

    parser = argparse.ArgumentParser(prog="binedge", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[common], help="dim, depth, reg, e, pd, number of minimal primes")
    sub.add_parser("primes", parents=[common], help="minimal primes P_T with heights and dimensions")
    for name, help_ in [("hilbert", "closed-form Hilbert series"), ("betti", "pure Betti diagram")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--oracle", action="store_true", help="recompute with the linear-algebra oracle and compare")
    sub.add_parser("deficiency", parents=[common], help="nonvanishing modules of deficiency")
    v = sub.add_parser("verify", parents=[common], help="run every closed form vs oracle comparison")
    v.add_argument("--max-size", type=int, default=4, help="check all pairs with m + n <= this")
    v.add_argument("--perturb-betti", type=int, nargs=3, action="append", metavar=("I", "J", "DELTA"),
                   help="negative control: add DELTA to the closed-form beta_{I,J}")
    v.add_argument("--perturb-series", type=int, nargs=2, action="append", metavar=("D", "DELTA"),
                   help="negative control: add DELTA to the closed-form Hilbert coefficient of degree D")
    return parser


COMMANDS = {
    "invariants": cmd_invariants,
    "primes": cmd_primes,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "deficiency": cmd_deficiency,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args, out, err)
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](cfg, out)
    except (InvalidArgument, Unsupported) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except TooLarge as e:
        err.write(f"refused: {e}\n")
        if getattr(args, "format", "text") == "json":
            out.write(json.dumps({"error": "too-large", "what": e.what, "rows": e.rows, "bound": e.bound}) + "\n")
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
