from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootcert.certificate import EQUAL, FAIL, GATE, BranchResult, BranchState
from rootcert.cube import (
    cbrt_certify,
    cube_select_digit,
    cube_setup,
    cube_step,
    direct_decision,
    run_cube_branch,
)
from rootcert.oracle import icbrt_oracle, zeroless_base9
from rootcert.residues import U18

# branch table for 6177847762549 == 18349**3, candidate 7:
# (value entering the step, digit root, chosen digit, p, frac, f)
ROWS_A7 = [
    (114404588189, 8, 2, 2, 12711620899, 152),
    (12711620747, 2, 5, 47, 1412402278, 141850),
    (1412260428, 3, 3, 290, 156917809, 3611958),
    (153305851, 4, 1, 1019, 17033978, 17033978),
]


def test_cube_select_digit_known_values():
    assert cube_select_digit(8, 7) == 2
    assert cube_select_digit(2, 7) == 5
    assert cube_select_digit(0, 1) == 9


def test_cube_select_digit_is_the_unique_solution():
    for a in U18:
        for target in range(9):
            b = cube_select_digit(target, a)
            assert 1 <= b <= 9
            assert a * a * b % 9 == target
            assert [d for d in range(1, 10) if a * a * d % 9 == target] == [b]


def test_cube_setup_known_values():
    state = cube_setup(6177847762549, 7)
    assert isinstance(state, BranchState)
    assert state.n == 114404588189
    trivial = cube_setup(343, 7)
    assert trivial.outcome == EQUAL and trivial.root == 7


def test_cube_setup_divisibility_gate():
    # 19 sits in class [1] but 54 does not divide 19 - 1
    result = cube_setup(19, 1)
    assert isinstance(result, BranchResult)
    assert result.outcome == GATE and "54" in result.reason


def test_branch_a7_reproduces_published_table():
    branch = run_cube_branch(6177847762549, 7)
    assert branch.outcome == EQUAL
    assert [(r.n, r.dr, r.digit, r.p, r.frac, r.f) for r in branch.rows] == ROWS_A7
    assert branch.root == 18349
    assert [r.f for r in branch.rows] == [152, 141850, 3611958, 17033978]


def test_first_step_cost_collapses_to_closed_form():
    # on the first digit the general cost must equal 2*a*b**2 + 12*b**3;
    # all 54 (a, b) pairs, exercised through a synthetic state
    for a in U18:
        for b in range(1, 10):
            n0 = a * a * b + 9 * 10**9  # forces digit b, keeps the branch alive
            state = BranchState(a=a, step=0, n=n0, p=0, pow9=1, budget=10)
            assert cube_step(state) is None
            row = state.rows[0]
            assert row.digit == b
            assert row.f == 2 * a * b * b + 12 * b**3


def test_incremental_decision_matches_direct_form():
    rng = Random(5)
    checked = 0
    for _ in range(3000):
        n = rng.getrandbits(48) | 1
        cert = cbrt_certify(n)
        for branch in cert.branches:
            if not branch.rows:
                continue
            state = cube_setup(cert.norm.core, branch.a)
            n0 = state.n
            for row in branch.rows:
                incremental = (row.frac > row.f) - (row.frac < row.f)
                assert direct_decision(n0, branch.a, row.p) == incremental
                checked += 1
    assert checked > 1000


def test_certify_known_cube():
    cert = cbrt_certify(6177847762549)
    assert cert.verdict == "cube" and cert.root == 18349
    by_a = {b.a: b.outcome for b in cert.branches}
    assert by_a[7] == EQUAL
    # the mod-54 gate settles the wrong candidates without iterating
    assert by_a[1] == GATE and by_a[13] == GATE


def test_certify_recombines_stripped_factors():
    assert cbrt_certify(27).root == 3
    assert cbrt_certify(8).root == 2
    assert cbrt_certify(216).root == 6
    assert cbrt_certify(1).root == 1


def test_certify_neighbors_of_cubes():
    assert cbrt_certify(6177847762551).verdict == "non-cube"
    assert cbrt_certify(6177847762547).verdict == "non-cube"


def test_certify_rejects_zero():
    with pytest.raises(ValueError):
        cbrt_certify(0)


def test_certify_rejects_by_class_without_iterating():
    cert = cbrt_certify(7)  # class [7]: no cubes there
    assert cert.verdict == "non-cube" and cert.branches == ()
    assert "class [7]" in cert.reason


def test_exhaustive_agreement_with_cbrt_oracle():
    for n in range(1, 20_001):
        cert = cbrt_certify(n)
        root, exact = icbrt_oracle(n)
        assert cert.is_power == exact, n
        if exact:
            assert cert.root == root, n


@given(st.integers(min_value=0, max_value=10**5), st.sampled_from(U18))
def test_digit_recovery_round_trip(p, a):
    branch = run_cube_branch((a + 18 * p) ** 3, a)
    assert branch.outcome == EQUAL
    assert branch.root == a + 18 * p
    if p:
        assert [r.digit for r in branch.rows] == zeroless_base9(p)


@given(st.integers(min_value=1, max_value=10**40))
def test_random_agreement_with_cbrt_oracle(n):
    cert = cbrt_certify(n)
    root, exact = icbrt_oracle(n)
    assert cert.is_power == exact
    if exact:
        assert cert.root == root
