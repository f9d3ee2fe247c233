"""Trace rows, per-candidate branch state and the certificates both engines emit."""

from __future__ import annotations

from dataclasses import dataclass, field

from .kernel import SignedResidual
from .residues import Normalization

# Branch outcomes.
EQUAL = "equal"  # digit expansion closed exactly; branch found the root
FAIL = "fail"  # cost overtook the remaining quota; no root on this branch
GATE = "gate"  # rejected before iterating (divisibility gate or value below a**e)


@dataclass(frozen=True, slots=True)
class IterationRow:
    """One loop step: remaining value n, its digit root, the forced digit,
    the accumulated expansion p, the reduced quota frac and the digit cost f."""

    step: int
    n: int
    dr: int
    digit: int
    p: int
    frac: int
    f: int


@dataclass(slots=True)
class BranchState:
    """Mutable per-candidate loop state; single-owner, nothing shared."""

    a: int
    step: int
    n: int
    p: int  # digits committed so far (value of the expansion before this step)
    pow9: int  # 9**step, maintained incrementally
    budget: int
    rows: list[IterationRow] = field(default_factory=list)


@dataclass(frozen=True, slots=True)
class BranchResult:
    a: int
    outcome: str  # EQUAL, FAIL or GATE
    rows: tuple[IterationRow, ...] = ()
    root: int | None = None  # root of the engine's input on EQUAL
    residual: SignedResidual | None = None  # 0 on EQUAL, negative on FAIL
    reason: str | None = None  # set on GATE


@dataclass(frozen=True, slots=True)
class Certificate:
    """Verdict plus the evidence that makes it independently checkable.

    root is the exact e-th root of value when one exists, else None; branches
    hold the per-candidate traces (empty when the class or the 2/3-exponents
    already rule the value out).
    """

    value: int
    exponent: int
    norm: Normalization
    core_class: int | None  # None when core == 1
    branches: tuple[BranchResult, ...]
    root: int | None
    reason: str | None = None  # why no branches ran, when they did not

    @property
    def is_power(self) -> bool:
        return self.root is not None

    @property
    def verdict(self) -> str:
        names = {2: ("square", "non-square"), 3: ("cube", "non-cube")}
        exact, not_exact = names[self.exponent]
        return exact if self.is_power else not_exact

    @property
    def iterations(self) -> int | None:
        """Terminal step index of the decisive branch, if any branch iterated."""
        rows = None
        for branch in self.branches:
            if branch.outcome == EQUAL:
                rows = branch.rows
                break
            if branch.rows and (rows is None or len(branch.rows) > len(rows)):
                rows = branch.rows
        return len(rows) - 1 if rows else None
