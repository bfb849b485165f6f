"""Exact-arithmetic toolkit for perfect self-isometries of the prime-order cyclic block."""

from .characters import (
    CharTable,
    ClassFunction,
    NonIntegralInnerProduct,
    aut_twist_index,
    char_table,
    character,
    generalized_character,
    indicator,
    inner_product,
    mult_index,
    p_regular,
)
from .cyclotomic import CycInt, is_prime, require_prime, symbolic_str, zeta_pow
from .isometry import (
    ALL_NEGATIVE,
    ALL_POSITIVE,
    FAILS_INTEGRALITY,
    FAILS_SEPARATION,
    KernelTable,
    MIXED,
    NonIntegralTransform,
    PERFECT,
    SignedIsometry,
    Verdict,
    adjoint_transform,
    adjoint_transform_raw,
    check_integrality,
    check_separation,
    forward_transform,
    forward_transform_raw,
    is_perfect,
    is_perfect_via_spaces,
    kernel_table,
)
from .pigroup import (
    AffineCoords,
    CHECK_KEYS,
    EXHAUSTIVE,
    MODES,
    NotPerfect,
    PIGroupReport,
    POSITIVE_THEN_NEGATE,
    decompose,
    enumerate_perfect,
    feasible_bound,
    gen_aut,
    gen_linear,
    gen_negid,
    iter_perfect,
    recompose,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "CycInt",
    "is_prime",
    "require_prime",
    "zeta_pow",
    "symbolic_str",
    "CharTable",
    "ClassFunction",
    "NonIntegralInnerProduct",
    "char_table",
    "character",
    "indicator",
    "generalized_character",
    "inner_product",
    "mult_index",
    "aut_twist_index",
    "p_regular",
    "PERFECT",
    "FAILS_INTEGRALITY",
    "FAILS_SEPARATION",
    "ALL_POSITIVE",
    "ALL_NEGATIVE",
    "MIXED",
    "NonIntegralTransform",
    "SignedIsometry",
    "KernelTable",
    "Verdict",
    "kernel_table",
    "forward_transform",
    "forward_transform_raw",
    "adjoint_transform",
    "adjoint_transform_raw",
    "check_integrality",
    "check_separation",
    "is_perfect",
    "is_perfect_via_spaces",
    "EXHAUSTIVE",
    "POSITIVE_THEN_NEGATE",
    "MODES",
    "CHECK_KEYS",
    "NotPerfect",
    "AffineCoords",
    "PIGroupReport",
    "gen_linear",
    "gen_aut",
    "gen_negid",
    "recompose",
    "decompose",
    "iter_perfect",
    "enumerate_perfect",
    "verify_structure",
    "feasible_bound",
]
