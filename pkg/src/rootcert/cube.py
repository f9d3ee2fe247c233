"""Deterministic perfect-cube certification.

Same skeleton as the square engine with three candidate branches: the core's
class mod 18 admits cube roots a + 18*p for a in a three-element set, and
with n0 = (n - a**3)/54 each branch maintains

    n0 - a*a*p_i - 9*(2*a*p_i**2 + 12*p_i**3) == 9**(i+1) * n_(i+1)

The digit cost folds the cubic terms of the expansion step by step,

    f_i = b * (2*a*(p_i + p_prev) + 12*(p_i**2 + p_i*p_prev + p_prev**2))

which collapses to 2*a*b**2 + 12*b**3 on the first digit.  Unlike the square
loop this one multiplies big by big (the p**2 and p**3 terms demand it).
Every found root is re-cubed before being reported, and direct_decision
offers the unfolded comparison as an always-available cross check.
"""

from __future__ import annotations

from .certificate import EQUAL, FAIL, GATE, BranchResult, BranchState, Certificate, IterationRow
from .kernel import SignedResidual, power
from .residues import U18, candidates_for_root, residue_class_of, root_feasible, strip_factors
from .square import step_budget

# b = _CUBE_DIGIT_FOR[a][n mod 9] is the unique digit 1..9 with
# a*a*b == n (mod 9); digit 9 stands in for residue 0.
_CUBE_DIGIT_FOR = {
    a: tuple((t * pow(a * a, -1, 9)) % 9 or 9 for t in range(9)) for a in U18
}


def cube_select_digit(target: int, a: int) -> int:
    """The unique digit 1..9 with a*a*digit == target (mod 9)."""
    if not 0 <= target <= 8:
        raise ValueError("target must be a residue 0..8")
    return _CUBE_DIGIT_FOR[a][target]


def cube_setup(n: int, a: int) -> BranchState | BranchResult:
    """Open the cube branch for candidate a, or settle it without iterating.

    (a + 18*p)**3 - a**3 is always a multiple of 54, so a failed mod-54
    check certifies the branch dead immediately.
    """
    aaa = a * a * a
    if n == aaa:
        return BranchResult(a, EQUAL, root=a, residual=SignedResidual.from_int(0))
    if n < aaa:
        return BranchResult(a, GATE, reason=f"value below {a}^3")
    n0, rem = divmod(n - aaa, 54)
    if rem:
        return BranchResult(a, GATE, reason=f"54 does not divide value - {a}^3")
    return BranchState(a=a, step=0, n=n0, p=0, pow9=1, budget=step_budget(n))


def cube_step(state: BranchState) -> BranchResult | None:
    """Advance one digit; returns the settled branch or None to continue."""
    a = state.a
    n_i = state.n
    target = n_i % 9
    b = _CUBE_DIGIT_FOR[a][target]
    diff = n_i - a * a * b
    frac = diff // 9  # exact by digit choice
    p_prev = state.p
    p_new = p_prev + state.pow9 * b
    f = b * (2 * a * (p_new + p_prev) + 12 * (p_new * p_new + p_new * p_prev + p_prev * p_prev))
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
        raise RuntimeError("cube branch exceeded its step budget")
    state.n = frac - f
    state.step += 1
    state.p = p_new
    state.pow9 *= 9
    return None


def run_cube_branch(n: int, a: int) -> BranchResult:
    """Run candidate a to termination on a core value n coprime to 6."""
    state = cube_setup(n, a)
    if isinstance(state, BranchResult):
        return state
    while True:
        result = cube_step(state)
        if result is not None:
            return result


def direct_decision(n0: int, a: int, p: int) -> int:
    """Unfolded form of the step-i comparison at accumulated expansion p.

    Compares n0 - a*a*p against 9*(2*a*p**2 + 12*p**3) and returns -1, 0 or
    +1 matching the incremental loop's fail/equal/continue decision.
    """
    lhs = n0 - a * a * p
    rhs = 18 * a * p * p + 108 * p * p * p
    return (lhs > rhs) - (lhs < rhs)


def cbrt_certify(n: int) -> Certificate:
    """Certify n as a perfect cube (with its exact root) or as a non-cube."""
    if n < 1:
        raise ValueError("can only certify a positive integer")
    norm = strip_factors(n)
    feasible = root_feasible(norm, 3)
    core_class = residue_class_of(norm.core) if norm.core > 1 else None

    if not feasible:
        return Certificate(n, 3, norm, core_class, (), None,
                           reason="exponent of 2 or 3 is not a multiple of 3")
    outside = 2 ** (norm.k // 3) * 3 ** (norm.l // 3)
    if norm.core == 1:
        return Certificate(n, 3, norm, None, (), outside)

    candidates = candidates_for_root(core_class, 3)
    if not candidates:
        return Certificate(n, 3, norm, core_class, (), None,
                           reason=f"class [{core_class}] contains no cubes")

    branches = tuple(run_cube_branch(norm.core, a) for a in candidates)
    root = None
    for branch in branches:
        if branch.outcome == EQUAL:
            if power(branch.root, 3) != norm.core:
                raise RuntimeError("unsound cube certificate")  # unreachable
            root = outside * branch.root
            break
    return Certificate(n, 3, norm, core_class, branches, root)
