"""Closed-form invariants of S/J for the complete bipartite graph K_{m,n}.

Every function takes the part sizes with ``m >= n >= 1`` (the larger part
first) and raises :class:`InvalidArgument` otherwise.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from .errors import InvalidArgument
from .series import BettiTable, HilbertSeries


def _check(m, n):
    if not (isinstance(m, int) and isinstance(n, int)):
        raise InvalidArgument(f"part sizes must be integers, got ({m!r}, {n!r})")
    if n < 1 or m < n:
        raise InvalidArgument(f"need m >= n >= 1, got (m, n) = ({m}, {n})")


def krull_dim(m: int, n: int) -> int:
    _check(m, n)
    return max(n + m + 1, 2 * m)


def depth(m: int, n: int) -> int:
    _check(m, n)
    return m + 2 if n == 1 else n + 2


def regularity(m: int, n: int) -> int:
    _check(m, n)
    # K_{1,1}: one quadric, linear resolution
    return 1 if (m, n) == (1, 1) else 2


def multiplicity(m: int, n: int) -> int:
    _check(m, n)
    if m > n + 1 or (n == 1 and m > 2):
        return 1
    return 2 * m


def projective_dimension(m: int, n: int) -> int:
    _check(m, n)
    if n == 1:
        return m
    return 2 * m + n - 2


def num_minimal_primes(m: int, n: int) -> int:
    _check(m, n)
    if n >= 2:
        return 3
    return 2 if m >= 2 else 1


def complete_graph_hilbert_series(r: int) -> HilbertSeries:
    """S/J for the complete graph on r vertices, in 2r variables."""
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f"r must be a positive integer, got {r!r}")
    return HilbertSeries.of([1, r - 1], r + 1)


def hilbert_series(m: int, n: int) -> HilbertSeries:
    """Sum of the five rational terms, brought to the denominator (1 - t)^(2m+2n)."""
    _check(m, n)
    terms = [
        complete_graph_hilbert_series(m + n),
        HilbertSeries.of([1], 2 * m),
        HilbertSeries.of([1], 2 * n),
        -complete_graph_hilbert_series(m),
        -complete_graph_hilbert_series(n),
    ]
    total = HilbertSeries((), 2 * m + 2 * n)
    for t in terms:
        total = total + t
    return total


def linear_strand_betti(i: int, r: int) -> int:
    """Betti numbers of the complete-graph ideal on r vertices: i * C(r, i+1) for 1 <= i <= r-1."""
    if i < 1 or i > r - 1:
        return 0
    return i * comb(r, i + 1)


def quadratic_strand_betti(m: int, n: int, i: int) -> int:
    """beta_{i,2} of S/J_{K_{m,n}} for 2 <= i <= p; zero outside that range."""
    _check(m, n)
    if i < 2 or i > projective_dimension(m, n):
        return 0
    if n == 1:
        return m * comb(m, i) - comb(m, i + 1) - comb(m + 1, i + 1)
    return (
        comb(m + n, i + 2)
        + comb(2 * n, i + 2)
        + comb(2 * m, i + 2)
        + m * comb(m + 2 * n - 1, i + 1)
        + n * comb(2 * m + n - 1, i + 1)
        - comb(m + 2 * n, i + 2)
        - comb(2 * m + n, i + 2)
        - (m + n) * comb(m + n - 1, i + 1)
    )


def betti_table(m: int, n: int) -> BettiTable:
    _check(m, n)
    entries = {(0, 0): 1, (1, 1): m * n}
    for i in range(2, projective_dimension(m, n) + 1):
        entries[(i, 2)] = quadratic_strand_betti(m, n, i)
    return BettiTable(2 * (m + n), entries)


@dataclass
class InvariantReport:
    m: int
    n: int
    dim: int
    depth: int
    reg: int
    multiplicity: int
    pd: int
    num_minimal_primes: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["minimal_primes"] = d.pop("num_minimal_primes")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        d = dict(d)
        d["num_minimal_primes"] = d.pop("minimal_primes")
        return cls(**{k: d[k] for k in cls.__dataclass_fields__})


def invariants(m: int, n: int) -> InvariantReport:
    return InvariantReport(
        m, n,
        dim=krull_dim(m, n),
        depth=depth(m, n),
        reg=regularity(m, n),
        multiplicity=multiplicity(m, n),
        pd=projective_dimension(m, n),
        num_minimal_primes=num_minimal_primes(m, n),
    )


# --- modules of deficiency ---------------------------------------------------

STAR = "star(4.1)"
GENERIC = "generic(4.2)"
NEXT = "m=n+1(4.3)"
N_TWO = "n=2(4.x)"
TWICE = "m=2n-2(4.4)"
SMALL = "small-special"


@dataclass
class DeficiencyRow:
    index: int
    depth: int
    dim: int
    description: str

    @property
    def cohen_macaulay(self) -> bool:
        return self.depth == self.dim


@dataclass
class DeficiencyReport:
    m: int
    n: int
    case_label: str
    rows: list[DeficiencyRow] = field(default_factory=list)
    cohen_macaulay: bool = False
    sequentially_cm: bool = False
    canonically_cm: bool = True

    @property
    def nonvanishing_indices(self) -> list[int] | None:
        if self.case_label == SMALL:
            return None
        return sorted(r.index for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "case": self.case_label,
            "indices": self.nonvanishing_indices,
            "rows": [[r.index, r.depth, r.dim] for r in self.rows],
            "descriptions": [r.description for r in self.rows],
            "cohen_macaulay": self.cohen_macaulay,
            "sequentially_cm": self.sequentially_cm,
            "canonically_cm": self.canonically_cm,
        }

    @classmethod
    def from_dict(cls, m: int, n: int, d: dict) -> "DeficiencyReport":
        descs = d.get("descriptions") or [""] * len(d["rows"])
        rows = [DeficiencyRow(i, dp, dm, s) for (i, dp, dm), s in zip(d["rows"], descs)]
        return cls(m, n, d["case"], rows, d["cohen_macaulay"], d["sequentially_cm"], d["canonically_cm"])


def cm_classification(m: int, n: int) -> tuple[bool, bool, bool]:
    """(Cohen-Macaulay, sequentially CM, canonically CM)."""
    _check(m, n)
    cm = (m, n) in {(1, 1), (2, 1)}
    seq = cm or (n == 1 and m > 2) or (m == n == 2)
    return cm, seq, True


def _rows_star(m: int) -> list[DeficiencyRow]:
    return [
        DeficiencyRow(m + 2, m + 2, m + 2, "CM; double dual (J~, A_1)/J~"),
        DeficiencyRow(2 * m, 2 * m, 2 * m, "S/A_1(-2m)"),
    ]


def _rows_generic(m: int, n: int) -> list[DeficiencyRow]:
    return [
        DeficiencyRow(n + 2, n + 1, n + 1, "omega^{n+1}(S/(J~, B_m))"),
        DeficiencyRow(m + 2, m + 1, m + 1, "omega^{m+1}(S/(J~, A_n))"),
        DeficiencyRow(2 * n, 2 * n, 2 * n, "S/B_m(-2n)"),
        DeficiencyRow(m + n + 1, m + n + 1, m + n + 1, "omega^{m+n+1}(S/J~)"),
        DeficiencyRow(2 * m, 2 * m, 2 * m, "S/A_n(-2m)"),
    ]


def _rows_next(n: int) -> list[DeficiencyRow]:
    return [
        DeficiencyRow(n + 2, n + 1, n + 1, "omega^{n+1}(S/(J~, B_{n+1}))"),
        DeficiencyRow(n + 3, n + 2, n + 2, "omega^{n+2}(S/(J~, A_n))"),
        DeficiencyRow(2 * n, 2 * n, 2 * n, "S/B_{n+1}(-2n)"),
        DeficiencyRow(2 * n + 2, 2 * n + 2, 2 * n + 2, "omega(S/J~) + S/A_n(-2n-2)"),
    ]


def _rows_n_two(m: int) -> list[DeficiencyRow]:
    return [
        DeficiencyRow(4, 4, 4, "omega^4((J~, B_m)/B_m)"),
        DeficiencyRow(m + 2, m + 1, m + 1, "omega^{m+1}(S/(J~, A_2))"),
        DeficiencyRow(m + 3, m + 3, m + 3, "omega(S/J~)"),
        DeficiencyRow(2 * m, 2 * m, 2 * m, "S/A_2(-2m)"),
    ]


def _rows_twice(m: int, n: int) -> list[DeficiencyRow]:
    return [
        DeficiencyRow(n + 2, n + 1, n + 1, "omega^{n+1}(S/(J~, B_m))"),
        # direct sum of CM modules of dimensions m+1 and m+2
        DeficiencyRow(m + 2, m + 1, m + 2, "omega^{m+1}(S/(J~, A_n)) + S/B_m(-2n)"),
        DeficiencyRow(m + n + 1, m + n + 1, m + n + 1, "omega(S/J~)"),
        DeficiencyRow(2 * m, 2 * m, 2 * m, "S/A_n(-2m)"),
    ]


def deficiency_case(m: int, n: int) -> str:
    """Which table applies; overlapping hypotheses go to the most specific one."""
    _check(m, n)
    if n == 1:
        return STAR if m > 2 else SMALL
    if n == 2 and m > 3:
        return N_TWO
    if m == n + 1:
        return NEXT if n > 3 else SMALL
    if m == 2 * n - 2:
        return TWICE if m > n + 1 else SMALL
    # the generic table needs five distinct indices
    if len({n + 2, m + 2, 2 * n, m + n + 1, 2 * m}) < 5:
        return SMALL
    return GENERIC


def deficiency_classification(m: int, n: int) -> DeficiencyReport:
    case = deficiency_case(m, n)
    rows = {
        STAR: lambda: _rows_star(m),
        N_TWO: lambda: _rows_n_two(m),
        NEXT: lambda: _rows_next(n),
        TWICE: lambda: _rows_twice(m, n),
        GENERIC: lambda: _rows_generic(m, n),
        SMALL: lambda: [],
    }[case]()
    rows.sort(key=lambda r: r.index)
    cm, seq, can = cm_classification(m, n)
    return DeficiencyReport(m, n, case, rows, cm, seq, can)
