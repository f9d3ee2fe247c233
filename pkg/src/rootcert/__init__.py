"""Deterministic perfect-square and perfect-cube certification for arbitrary
precision integers, via residue classes mod 18 and zeroless base-9 digit
expansion, plus the class-based twin-prime-product filter."""

from .certificate import EQUAL, FAIL, GATE, BranchResult, Certificate, IterationRow
from .cube import cbrt_certify, cube_select_digit, direct_decision
from .kernel import SignedResidual, digit_root, parse_decimal, to_decimal
from .oracle import (
    BenchRecord,
    bench_run,
    icbrt_oracle,
    isqrt_oracle,
    predicted_iterations,
    zeroless_base9,
)
from .residues import (
    U18,
    CandidateSet,
    Normalization,
    candidates_for_root,
    residue_class_of,
    root_feasible,
    strip_factors,
    u18_power_table,
)
from .square import select_digit, sqrt_certify
from .twins import (
    NEITHER,
    SQUARE_CANDIDATE,
    TWIN_PRODUCT_CANDIDATE,
    FilterResult,
    discriminate,
    twin_type,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BranchResult",
    "CandidateSet",
    "Certificate",
    "EQUAL",
    "FAIL",
    "FilterResult",
    "GATE",
    "IterationRow",
    "NEITHER",
    "Normalization",
    "SQUARE_CANDIDATE",
    "SignedResidual",
    "TWIN_PRODUCT_CANDIDATE",
    "U18",
    "bench_run",
    "candidates_for_root",
    "cbrt_certify",
    "cube_select_digit",
    "digit_root",
    "direct_decision",
    "discriminate",
    "icbrt_oracle",
    "isqrt_oracle",
    "parse_decimal",
    "predicted_iterations",
    "residue_class_of",
    "root_feasible",
    "select_digit",
    "sqrt_certify",
    "strip_factors",
    "to_decimal",
    "twin_type",
    "u18_power_table",
    "zeroless_base9",
]
