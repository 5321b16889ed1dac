"""Rational generating functions of the form P(t) / (1 - t)^D with integer P.

Coefficients are Python ints throughout, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import InvalidArgument


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k] += v
    return out


def _times_one_minus_t_pow(p: Sequence[int], k: int) -> list[int]:
    """p(t) * (1 - t)^k."""
    out = list(p)
    for _ in range(k):
        out = [a - b for a, b in zip(out + [0], [0] + out)]
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denom_power; ``numerator[k]`` is the coefficient of t^k."""

    numerator: tuple[int, ...]
    denom_power: int

    def __post_init__(self):
        if self.denom_power < 0:
            raise InvalidArgument("denominator power must be nonnegative")
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))

    @classmethod
    def of(cls, numerator: Sequence[int], denom_power: int) -> "HilbertSeries":
        return cls(tuple(numerator), denom_power)

    def is_zero(self) -> bool:
        return not self.numerator

    def to_power(self, d: int) -> "HilbertSeries":
        """Same series rewritten over (1 - t)^d, d >= denom_power."""
        if d < self.denom_power:
            raise InvalidArgument("can only raise the denominator power")
        return HilbertSeries(tuple(_times_one_minus_t_pow(self.numerator, d - self.denom_power)), d)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        d = max(self.denom_power, other.denom_power)
        a, b = self.to_power(d), other.to_power(d)
        return HilbertSeries(tuple(_poly_add(a.numerator, b.numerator)), d)

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries(tuple(-c for c in self.numerator), self.denom_power)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-other)

    def expand(self, dmax: int) -> list[int]:
        return expand(self, dmax)

    def canonical(self) -> "HilbertSeries":
        if self.is_zero():
            return HilbertSeries((), 0)
        r, d = reduce_pole_order(self)
        return HilbertSeries(r, d)

    def same_series(self, other: "HilbertSeries") -> bool:
        """Equality as power series (the dataclass ``==`` compares representations)."""
        return (self - other).is_zero()

    def value_at_one(self) -> int:
        return sum(self.numerator)

    def pretty(self) -> str:
        return f"({format_poly(self.numerator)})/(1-t)^{self.denom_power}"


def format_poly(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = var if mag == 1 else f"{mag}{var}"
        else:
            body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def expand(s: HilbertSeries, dmax: int) -> list[int]:
    """Coefficients c_0..c_dmax of the power series."""
    if dmax < 0:
        raise InvalidArgument("dmax must be >= 0")
    D = s.denom_power
    if D == 0:
        tail = [1] + [0] * dmax
    else:
        tail = [comb(d + D - 1, D - 1) for d in range(dmax + 1)]
    out = []
    for d in range(dmax + 1):
        out.append(sum(s.numerator[k] * tail[d - k] for k in range(min(d, len(s.numerator) - 1) + 1)))
    return out


def _divide_by_one_minus_t(p: Sequence[int]) -> list[int]:
    """Synthetic division by (1 - t); caller guarantees p(1) == 0."""
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q


def reduce_pole_order(s: HilbertSeries) -> tuple[tuple[int, ...], int]:
    """Cancel factors (1 - t) until the numerator no longer vanishes at t = 1.

    Returns ``(R, d)`` with ``s = R/(1-t)^d`` and ``R(1) != 0``. A negative
    ``d`` means the series is a polynomial times (1 - t)^{-d}.
    """
    if s.is_zero():
        raise InvalidArgument("zero series: the module is zero")
    num = list(s.numerator)
    d = s.denom_power
    while sum(num) == 0:
        num = _divide_by_one_minus_t(num)
        d -= 1
    if d < 0:
        num = _times_one_minus_t_pow(num, -d)
        d = 0
    return _trim(num), d


def multiplicity(s: HilbertSeries) -> int:
    return sum(reduce_pole_order(s)[0])


@dataclass
class BettiTable:
    """Graded Betti numbers with beta[i, j] = dim Tor_i(K, M)_{i+j}.

    Zero entries are not stored.
    """

    num_vars: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise InvalidArgument(f"negative Betti number at {(i, j)}")
            if v:
                clean[(int(i), int(j))] = int(v)
        self.entries = clean

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.num_vars == other.num_vars and self.entries == other.entries

    @property
    def proj_dim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j for _, j in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def strand(self, j: int) -> dict[int, int]:
        return {i: v for (i, b), v in sorted(self.entries.items()) if b == j}

    def as_triples(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_triples(cls, num_vars: int, triples) -> "BettiTable":
        return cls(num_vars, {(i, j): v for i, j, v in triples})

    def diff(self, other: "BettiTable") -> dict[tuple[int, int], tuple[int, int]]:
        keys = set(self.entries) | set(other.entries)
        return {k: (self[k], other[k]) for k in sorted(keys) if self[k] != other[k]}

    def render(self, min_strands: int = 1) -> str:
        """Macaulay2-style diagram: rows are strands j, columns homological degrees i."""
        pmax = self.proj_dim
        rmax = max(self.regularity, min_strands - 1)
        cols = list(range(pmax + 1))
        cells = {(i, j): (str(self[(i, j)]) if self[(i, j)] else ".") for i in cols for j in range(rmax + 1)}
        width = max([len(c) for c in cells.values()] + [len(str(pmax)), len(str(max(self.total(i) for i in cols)))])
        lines = ["       " + " ".join(str(i).rjust(width) for i in cols)]
        lines.append("total: " + " ".join(str(self.total(i)).rjust(width) for i in cols))
        for j in range(rmax + 1):
            lines.append(f"{j}:".ljust(7) + " ".join(cells[(i, j)].rjust(width) for i in cols))
        return "\n".join(lines)


def series_from_betti(b: BettiTable) -> HilbertSeries:
    """Alternating sum of the graded free modules: sum (-1)^i beta_{i,j} t^{i+j} / (1-t)^n."""
    num: list[int] = []
    for (i, j), v in b.entries.items():
        k = i + j
        if len(num) <= k:
            num.extend([0] * (k + 1 - len(num)))
        num[k] += (-1) ** i * v
    return HilbertSeries(tuple(num), b.num_vars)
