"""Class-based discrimination between twin-prime products and squares.

A pair (q, q+2) of integers coprime to 6 can only straddle the class pairs
([5],[7]), ([11],[13]) or ([17],[1]) mod 18, and its product always lands in
class [17].  Squares never do (they live in [1], [7] and [13]), so the class
of a value separates the two shapes.  Membership in [17] is necessary, not
sufficient, for being a twin product; hence "candidate" in the verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .residues import Normalization, candidates_for_root, residue_class_of, strip_factors

SQUARE_CANDIDATE = "square-candidate"
TWIN_PRODUCT_CANDIDATE = "twin-product-candidate"
NEITHER = "neither"

# lower member's class -> pair type
_TYPE_BY_LOWER_CLASS = {5: "A", 11: "B", 17: "C"}


@dataclass(frozen=True, slots=True)
class FilterResult:
    value: int
    norm: Normalization
    core_class: int
    verdict: str
    square_candidates: tuple[int, ...]


def twin_type(lower: int, upper: int) -> str:
    """Type A, B or C of a coprime-to-6 pair (q, q+2), from q's class.

    Primality is not checked; the classification is purely residue-based.
    """
    if upper != lower + 2:
        raise ValueError("pair members must differ by exactly 2")
    lower_class = residue_class_of(lower)
    upper_class = residue_class_of(upper)
    if lower_class not in _TYPE_BY_LOWER_CLASS:
        raise ValueError(
            f"classes [{lower_class}], [{upper_class}] cannot hold a twin pair"
        )
    return _TYPE_BY_LOWER_CLASS[lower_class]


def discriminate(n: int) -> FilterResult:
    """Sort n (after stripping 2s and 3s) into square / twin-product / neither."""
    norm = strip_factors(n)
    core_class = residue_class_of(norm.core) if norm.core > 1 else 1
    if core_class == 17:
        verdict = TWIN_PRODUCT_CANDIDATE
    elif core_class in (1, 7, 13):
        verdict = SQUARE_CANDIDATE
    else:
        verdict = NEITHER
    return FilterResult(
        n, norm, core_class, verdict,
        candidates_for_root(core_class, 2).a_values,
    )
