"""Residue classification mod 18 and candidate enumeration for root tests.

Integers coprime to 6 fall into the six classes {1, 5, 7, 11, 13, 17} mod 18
(the reduced residue system of 18).  The class of a value is recovered from
its digit root alone, and the class of a perfect e-th power constrains the
root's own class to a small candidate set read off a 6x6 power table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import digit_root

U18 = (1, 5, 7, 11, 13, 17)

# digit root -> class mod 18, for values coprime to 6.  Digit roots 1, 5, 7
# name their own class; 2, 4, 8 belong to 11, 13, 17.
_CLASS_BY_DIGIT_ROOT = {1: 1, 5: 5, 7: 7, 2: 11, 4: 13, 8: 17}


def _build_power_table() -> dict[int, tuple[int, ...]]:
    """Powers of each class, indexed by exponent mod 6 (the cycle length)."""
    table = {}
    for a in U18:
        row = [1]
        for _ in range(5):
            row.append(row[-1] * a % 18)
        table[a] = tuple(row)
    return table


_POWER_TABLE = _build_power_table()


@dataclass(frozen=True, slots=True)
class Normalization:
    """input == 2**k * 3**l * core, with core coprime to 6."""

    k: int
    l: int
    core: int

    def reconstruct(self) -> int:
        return (self.core << self.k) * 3**self.l


@dataclass(frozen=True, slots=True)
class CandidateSet:
    """Classes whose e-th power lands in a given class, sorted ascending."""

    exponent: int
    a_values: tuple[int, ...]

    def __iter__(self):
        return iter(self.a_values)

    def __bool__(self) -> bool:
        return bool(self.a_values)


def strip_factors(m: int) -> Normalization:
    """Split off all factors of 2 and 3."""
    if m < 1:
        raise ValueError("can only normalize a positive integer")
    k = (m & -m).bit_length() - 1
    m >>= k
    l = 0
    while True:
        q, r = divmod(m, 3)
        if r:
            break
        m = q
        l += 1
    return Normalization(k, l, m)


def residue_class_of(n: int) -> int:
    """Class of n mod 18, read from the digit root; n must be coprime to 6."""
    if n % 2 == 0 or n % 3 == 0:
        raise ValueError(f"{n} is not coprime to 6")
    return _CLASS_BY_DIGIT_ROOT[digit_root(n)]


def u18_power_table(a: int, e: int) -> int:
    """Class of a**e mod 18; cycles with period dividing 6."""
    if a not in _POWER_TABLE:
        raise ValueError(f"{a} is not a class coprime to 18")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return _POWER_TABLE[a][e % 6]


def candidates_for_root(cls: int, e: int) -> CandidateSet:
    """All classes a with a**e in class cls; empty means no e-th root exists
    among integers coprime to 6."""
    if e < 2:
        raise ValueError("root degree must be at least 2")
    return CandidateSet(e, tuple(a for a in U18 if _POWER_TABLE[a][e % 6] == cls))


def root_feasible(norm: Normalization, e: int) -> bool:
    """The stripped 2- and 3-exponents must both be multiples of e."""
    return norm.k % e == 0 and norm.l % e == 0
