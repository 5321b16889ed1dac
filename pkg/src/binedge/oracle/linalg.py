"""Dense row reduction over GF(p) or Q, with the kernel chosen at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise, or
when ``BINEDGE_PURE_PYTHON`` is set in the environment, the pure-Python
twin in ``_kernel_py`` takes over. Characteristic 0 always runs in Python:
echelon forms on ``fractions.Fraction``, ranks by fraction-free integer
elimination.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from ..errors import InvalidArgument
from . import _kernel_py

if os.environ.get("BINEDGE_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernel as _compiled
    except ImportError:
        _compiled = None

KERNEL = "compiled" if _compiled is not None else "python"
_active = _compiled if _compiled is not None else _kernel_py


def use_kernel(name: str) -> str:
    """Switch between ``"compiled"`` and ``"python"``; returns the previous choice."""
    global _active, KERNEL
    prev = KERNEL
    if name == "compiled":
        if _compiled is None:
            raise InvalidArgument("the compiled kernel is not available in this build")
        _active = _compiled
    elif name == "python":
        _active = _kernel_py
    else:
        raise InvalidArgument(f"unknown kernel {name!r}")
    KERNEL = name
    return prev


def compiled_available() -> bool:
    return _compiled is not None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Working field: ``characteristic`` 0 means Q, otherwise GF(p)."""

    characteristic: int = 32003

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if not _is_prime(p):
                raise InvalidArgument(f"characteristic {p} is not prime")
            if p >= 2 ** 31:
                raise InvalidArgument("characteristic must be below 2**31")

    @property
    def is_exact_rational(self) -> bool:
        return self.characteristic == 0

    def elem(self, v: int):
        if self.characteristic:
            return v % self.characteristic
        return Fraction(v)

    def neg(self, v):
        if self.characteristic:
            return -v % self.characteristic
        return -v

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


GF32003 = FieldConfig(32003)
QQ = FieldConfig(0)


def _rref_fraction(rows, ncols):
    nrows = len(rows)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), -1)
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = Fraction(prow[c])
        if lead != 1:
            prow[c:] = [v / lead for v in prow[c:]]
        tail = prow[c:]
        for i in range(nrows):
            if i != r:
                row = rows[i]
                f = row[c]
                if f:
                    row[c:] = [a - f * b for a, b in zip(row[c:], tail)]
        pivots.append(c)
        r += 1
    return pivots


def _integer_rows(rows):
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        den = 1
        for v in row:
            if v.__class__ is not int:
                den = lcm(den, v.denominator)
        if den == 1:
            out.append([int(v) for v in row])
        else:
            out.append([int(v * den) for v in row])
    return out


def _rank_integer(rows, ncols):
    """Fraction-free forward elimination; each updated row is divided by its content."""
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), -1)
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        tail = prow[c:]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                g = gcd(lead, f)
                a, b = lead // g, f // g
                new = [a * x - b * y for x, y in zip(row[c:], tail)]
                content = gcd(*new)
                if content > 1:
                    new = [x // content for x in new]
                row[c:] = new
        r += 1
    return r


def rref(rows: list[list], ncols: int, field: FieldConfig) -> tuple[list[int], list[list]]:
    """Row-reduce ``rows`` in place; returns (pivot columns, nonzero reduced rows)."""
    if not rows or ncols == 0:
        return [], []
    if field.characteristic:
        pivots = _active.rref_modp(rows, ncols, field.characteristic)
    else:
        pivots = _rref_fraction(rows, ncols)
    return pivots, rows[: len(pivots)]


def rank(rows: list[list], ncols: int, field: FieldConfig) -> int:
    """Rank of ``rows``; the list is consumed."""
    if not rows or ncols == 0:
        return 0
    if field.characteristic:
        return _active.rank_modp(rows, ncols, field.characteristic)
    return _rank_integer(_integer_rows(rows), ncols)


def nullspace(pivots: list[int], reduced: list[list], ncols: int, field: FieldConfig) -> list[list]:
    """Basis of {v : row . v = 0 for every row} given an RREF."""
    piv_set = set(pivots)
    zero, one = field.elem(0), field.elem(1)
    out = []
    for free in range(ncols):
        if free in piv_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for pc, row in zip(pivots, reduced):
            if row[free]:
                v[pc] = field.neg(row[free])
        out.append(v)
    return out


def densify(sparse_rows: list[dict], ncols: int, field: FieldConfig) -> list[list]:
    """Dense rows from column -> value dicts. Over Q integer values stay ints."""
    p = field.characteristic
    out = []
    for sr in sparse_rows:
        row = [0] * ncols
        if p:
            for c, v in sr.items():
                row[c] = v % p
        else:
            for c, v in sr.items():
                row[c] = v
        out.append(row)
    return out
