"""Deterministic perfect-square certification.

For an input whose coprime-to-6 core sits in class c mod 18, every possible
square root has the form a + 18*p with a in a two-element candidate set
determined by c.  Per candidate the loop discovers the zeroless base-9 digits
of p one per step: with n0 = (n - a*a)/36 it maintains the exact identity

    n0 - a*p_i - 9*p_i**2 == 9**(i+1) * n_(i+1)

so the comparison frac_i vs f_i decides everything: equality means
n == (a + 18*p_i)**2 exactly, frac below f certifies the branch dead, and the
difference carries to the next step otherwise.  The loop touches the big
value only through addition, subtraction, multiplication by constants up to
81 and short division by 9.
"""

from __future__ import annotations

from .certificate import EQUAL, FAIL, GATE, BranchResult, BranchState, Certificate, IterationRow
from .kernel import SignedResidual, power
from .residues import U18, candidates_for_root, residue_class_of, root_feasible, strip_factors

# b = _DIGIT_FOR[a][n mod 9] is the unique digit 1..9 with a*b == n (mod 9);
# digit 9 stands in for residue 0.
_DIGIT_FOR = {
    a: tuple((t * pow(a, -1, 9)) % 9 or 9 for t in range(9)) for a in U18
}


def select_digit(target: int, a: int) -> int:
    """The unique digit 1..9 with a*digit == target (mod 9)."""
    if not 0 <= target <= 8:
        raise ValueError("target must be a residue 0..8")
    return _DIGIT_FOR[a][target]


def step_budget(n: int) -> int:
    """Hard cap on loop steps; the termination test always fires earlier."""
    digits9 = n.bit_length() // 3 + 2  # upper bound on base-9 length
    return (digits9 + 1) // 2 + 4


def setup(n: int, a: int) -> BranchState | BranchResult:
    """Open the branch for candidate a, or settle it without iterating.

    n == a*a is the trivial zero-digit root; n below a*a cannot have a root
    of shape a + 18*p; and since (a + 18*p)**2 - a*a is always a multiple of
    36, a failed mod-36 check certifies the branch dead on the spot.
    """
    aa = a * a
    if n == aa:
        return BranchResult(a, EQUAL, root=a, residual=SignedResidual.from_int(0))
    if n < aa:
        return BranchResult(a, GATE, reason=f"value below {a}^2")
    n0, rem = divmod(n - aa, 36)
    if rem:
        return BranchResult(a, GATE, reason=f"36 does not divide value - {a}^2")
    return BranchState(a=a, step=0, n=n0, p=0, pow9=1, budget=step_budget(n))


def step(state: BranchState) -> BranchResult | None:
    """Advance one digit; returns the settled branch or None to continue."""
    a = state.a
    n_i = state.n
    target = n_i % 9
    b = _DIGIT_FOR[a][target]
    diff = n_i - a * b
    frac = diff // 9  # exact: b was chosen to make 9 divide diff
    p_new = state.p + state.pow9 * b
    f = b * (state.p + p_new)
    state.rows.append(
        IterationRow(state.step, n_i, target or 9, b, p_new, frac, f)
    )
    if frac == f:
        return BranchResult(
            a, EQUAL, tuple(state.rows), root=a + 18 * p_new,
            residual=SignedResidual.from_int(0),
        )
    if frac < f:
        return BranchResult(
            a, FAIL, tuple(state.rows), residual=SignedResidual.from_int(frac - f)
        )
    if state.step >= state.budget:
        raise RuntimeError("square branch exceeded its step budget")
    state.n = frac - f
    state.step += 1
    state.p = p_new
    state.pow9 *= 9
    return None


def run_branch(n: int, a: int) -> BranchResult:
    """Run candidate a to termination on a core value n coprime to 6."""
    state = setup(n, a)
    if isinstance(state, BranchResult):
        return state
    while True:
        result = step(state)
        if result is not None:
            return result


def sqrt_certify(n: int) -> Certificate:
    """Certify n as a perfect square (with its exact root) or as a non-square.

    Strips factors of 2 and 3, rejects on odd exponents, classifies the core
    mod 18, and runs every candidate branch to termination.  A found root is
    re-squared before it is reported; the full root recombines the stripped
    factors as 2**(k/2) * 3**(l/2) * (a + 18*p).
    """
    if n < 1:
        raise ValueError("can only certify a positive integer")
    norm = strip_factors(n)
    feasible = root_feasible(norm, 2)
    core_class = residue_class_of(norm.core) if norm.core > 1 else None

    if not feasible:
        return Certificate(n, 2, norm, core_class, (), None,
                           reason="exponent of 2 or 3 is odd")
    outside = 2 ** (norm.k // 2) * 3 ** (norm.l // 2)
    if norm.core == 1:
        return Certificate(n, 2, norm, None, (), outside)

    candidates = candidates_for_root(core_class, 2)
    if not candidates:
        return Certificate(n, 2, norm, core_class, (), None,
                           reason=f"class [{core_class}] contains no squares")

    branches = tuple(run_branch(norm.core, a) for a in candidates)
    root = None
    for branch in branches:
        if branch.outcome == EQUAL:
            if power(branch.root, 2) != norm.core:
                raise RuntimeError("unsound square certificate")  # unreachable
            root = outside * branch.root
            break
    return Certificate(n, 2, norm, core_class, branches, root)
