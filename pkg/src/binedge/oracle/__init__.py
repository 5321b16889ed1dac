"""Brute-force linear algebra checks: Hilbert functions, strand identities, Koszul Betti numbers."""
from .koszul import (
    KoszulComplex,
    OracleBetti,
    TruncatedTable,
    depth_via_ab,
    koszul_betti,
    oracle_betti_table,
    regularity_via_betti,
)
from .linalg import GF32003, KERNEL, QQ, FieldConfig, compiled_available, use_kernel
from .strands import (
    DEFAULT_ROW_BOUND,
    GradedStrand,
    annihilator,
    hilbert_function,
    hilbert_function_values,
    ideal_strand,
    same_strand,
    strand_contains,
    strand_intersection,
    strand_intersection_dim,
    strand_sum,
    strands_equal,
)
