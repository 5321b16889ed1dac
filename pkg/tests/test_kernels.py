import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from binedge.errors import InvalidArgument
from binedge.oracle import linalg
from binedge.oracle import _kernel_py

P = 32003

needs_compiled = pytest.mark.skipif(not linalg.compiled_available(), reason="compiled kernel not built")


def random_matrix(rng, rows, cols, p, density=0.4):
    return [[rng.randrange(p) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def test_python_rref_small():
    rows = [[0, 2, 4], [1, 1, 1], [1, 3, 5]]
    piv = _kernel_py.rref_modp(rows, 3, 7)
    assert piv == [0, 1]
    assert rows[:2] == [[1, 0, 6], [0, 1, 2]]
    assert _kernel_py.rank_modp([[0, 2, 4], [1, 1, 1], [1, 3, 5]], 3, 7) == 2


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 25), st.integers(1, 25), st.sampled_from([2, 3, 101, P]))
def test_compiled_matches_python(seed, nrows, ncols, p):
    from binedge.oracle import _kernel

    rng = random.Random(seed)
    a = random_matrix(rng, nrows, ncols, p)
    b = [list(r) for r in a]
    c = [list(r) for r in a]
    assert _kernel.rref_modp(a, ncols, p) == _kernel_py.rref_modp(b, ncols, p)
    assert a == b
    assert _kernel.rank_modp(c, ncols, p) == _kernel_py.rank_modp([list(r) for r in c], ncols, p)


def test_use_kernel_switch():
    prev = linalg.use_kernel("python")
    try:
        assert linalg.KERNEL == "python"
        assert linalg.rank([[1, 2], [2, 4]], 2, linalg.GF32003) == 1
    finally:
        linalg.use_kernel(prev)
    with pytest.raises(InvalidArgument):
        linalg.use_kernel("fortran")


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 12), st.integers(1, 12))
def test_rational_rank_matches_echelon(seed, nrows, ncols):
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 4)) if rng.random() < 0.5 else 0
             for _ in range(ncols)] for _ in range(nrows)]
    pivots, _ = linalg.rref([list(r) for r in rows], ncols, linalg.QQ)
    assert linalg.rank([list(r) for r in rows], ncols, linalg.QQ) == len(pivots)


def test_rational_rref_stays_exact():
    pivots, reduced = linalg.rref([[2, 1], [4, 3]], 2, linalg.QQ)
    assert pivots == [0, 1]
    assert reduced == [[1, 0], [0, 1]]
    assert all(isinstance(v, (int, Fraction)) for r in reduced for v in r)
    _, reduced = linalg.rref([[3, 1]], 2, linalg.QQ)
    assert reduced[0][1] == Fraction(1, 3)


def test_nullspace():
    fld = linalg.FieldConfig(7)
    pivots, reduced = linalg.rref([[1, 2, 3]], 3, fld)
    basis = linalg.nullspace(pivots, reduced, 3, fld)
    assert len(basis) == 2
    for v in basis:
        assert sum(a * b for a, b in zip(reduced[0], v)) % 7 == 0


def test_environment_forces_python_kernel():
    import os
    import subprocess
    import sys

    env = dict(os.environ, BINEDGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from binedge.oracle import linalg; print(linalg.KERNEL)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "binedge", "invariants", "--m", "2", "--n", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "dim           5" in out.stdout
