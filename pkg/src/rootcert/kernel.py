"""Exact natural-number arithmetic, restricted to what the root engines need.

Values are plain Python ints (arbitrary precision, immutable); the functions
here name the only arithmetic shapes the certification loops are allowed to
use: big plus/minus big, big times a small constant, and short division by a
small fixed divisor.  General multiply and power exist solely for the cubic
cost terms and for re-verifying a found root.
"""

from __future__ import annotations

from dataclasses import dataclass

# Divisors the engines short-divide by; everything else is out of contract.
SHORT_DIVISORS = frozenset({2, 3, 9, 18, 27, 36, 54})

MUL_SMALL_LIMIT = 81


@dataclass(frozen=True, slots=True)
class SignedResidual:
    """Sign/magnitude view of a branch residual; the one signed value around."""

    sign: int  # -1, 0 or +1
    magnitude: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1) or self.magnitude < 0:
            raise ValueError("invalid sign/magnitude pair")
        if (self.sign == 0) != (self.magnitude == 0):
            raise ValueError("sign must be 0 exactly when magnitude is 0")

    @classmethod
    def from_int(cls, value: int) -> "SignedResidual":
        if value == 0:
            return cls(0, 0)
        return cls(1 if value > 0 else -1, abs(value))

    @property
    def value(self) -> int:
        return self.sign * self.magnitude

    def __str__(self) -> str:
        return str(self.value)


def parse_decimal(text: str) -> int:
    """Parse a plain decimal digit string (no sign, no separators)."""
    if not text or not text.isascii() or not text.isdigit():
        raise ValueError(f"not a decimal digit string: {text!r}")
    return int(text)


def to_decimal(x: int) -> str:
    if x < 0:
        raise ValueError("negative value has no natural decimal form")
    return str(x)


def add(x: int, y: int) -> int:
    return x + y


def sub_checked(x: int, y: int) -> int | None:
    """x - y, or None when y > x; underflow is an outcome, not an error."""
    if y > x:
        return None
    return x - y


def compare(x: int, y: int) -> int:
    """-1, 0 or +1 as x is below, equal to or above y."""
    return (x > y) - (x < y)


def mul_small(x: int, m: int) -> int:
    """Multiply by a small constant (at most 81, i.e. one base-9 digit pair)."""
    if not 0 <= m <= MUL_SMALL_LIMIT:
        raise ValueError(f"multiplier {m} outside 0..{MUL_SMALL_LIMIT}")
    return x * m


def mul(x: int, y: int) -> int:
    """General product; reserved for cubic cost terms and root re-verification."""
    return x * y


def power(x: int, e: int) -> int:
    """x**e for a small nonnegative exponent; power(x, 0) == 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return x**e


def div_small(x: int, d: int) -> tuple[int, int]:
    """Short division by a fixed one-word divisor; returns (quotient, remainder)."""
    if d not in SHORT_DIVISORS:
        raise ValueError(f"divisor {d} not in {sorted(SHORT_DIVISORS)}")
    return divmod(x, d)


def digit_root(x: int) -> int:
    """Iterated decimal digit sum: 0 for 0, otherwise 1..9 with 9 for multiples of 9.

    Computed as x mod 9 (the two agree for every positive integer), so it
    stays cheap for huge values.
    """
    if x == 0:
        return 0
    r = x % 9
    return r if r else 9


def shift9(x: int, i: int) -> int:
    """x * 9**i via repeated small multiplication."""
    if i < 0:
        raise ValueError("shift amount must be nonnegative")
    while i >= 2:
        x = mul_small(x, 81)
        i -= 2
    if i:
        x = mul_small(x, 9)
    return x
