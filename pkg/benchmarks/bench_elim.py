"""Compiled vs pure-Python elimination kernel.

    python benchmarks/bench_elim.py [--repeat 3] [--sizes 100 200 400]

Three workloads: raw row reduction of random dense matrices mod 32003,
the Koszul Betti tables behind the acceptance suite, and Hilbert functions
up to degree 6. The last two include all the Python-side row assembly, so
they show what the kernel buys end to end.
"""
import argparse
import random
import sys
import time

from binedge.graphs import complete_bipartite
from binedge.ideals import edge_binomials
from binedge.oracle import GF32003, KoszulComplex, compiled_available, hilbert_function_values, linalg
from binedge.verify import pairs_up_to

P = 32003


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def dense_workload(size, seed=0):
    rng = random.Random(seed)
    base = [[rng.randrange(P) for _ in range(size)] for _ in range(size)]

    def run():
        linalg.rref([list(r) for r in base], size, GF32003)
    return run


def koszul_workload():
    ideals = [edge_binomials(complete_bipartite(m, n)) for m, n in [(1, 1), (2, 1), (3, 1), (2, 2)]]

    def run():
        for ideal in ideals:
            KoszulComplex(ideal, GF32003).table(3)
    return run


def hilbert_workload():
    ideals = [edge_binomials(complete_bipartite(m, n)) for m, n in pairs_up_to(5)]

    def run():
        for ideal in ideals:
            hilbert_function_values(ideal, 6, GF32003)
    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    args = ap.parse_args(argv)

    if not compiled_available():
        print("compiled kernel not built; only the Python kernel can be timed", file=sys.stderr)
        kernels = ["python"]
    else:
        kernels = ["compiled", "python"]

    workloads = [(f"rref dense {s}x{s}", dense_workload(s)) for s in args.sizes]
    workloads += [("koszul tables (4 pairs)", koszul_workload()), ("hilbert m+n<=5, d<=6", hilbert_workload())]

    print(f"{'workload':28s}" + "".join(f"{k:>12s}" for k in kernels) + ("     speedup" if len(kernels) == 2 else ""))
    prev = linalg.KERNEL
    try:
        for name, fn in workloads:
            row = []
            for k in kernels:
                linalg.use_kernel(k)
                row.append(best_of(args.repeat, fn))
            line = f"{name:28s}" + "".join(f"{t:11.3f}s" for t in row)
            if len(row) == 2:
                line += f"{row[1] / row[0]:11.1f}x"
            print(line)
    finally:
        linalg.use_kernel(prev)


if __name__ == "__main__":
    main()
