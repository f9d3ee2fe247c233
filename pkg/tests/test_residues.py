import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootcert.residues import (
    U18,
    candidates_for_root,
    residue_class_of,
    root_feasible,
    strip_factors,
    u18_power_table,
)

# complete power table mod 18, rows by class, columns by exponent mod 6
POWER_TABLE = {
    1: (1, 1, 1, 1, 1, 1),
    5: (1, 5, 7, 17, 13, 11),
    7: (1, 7, 13, 1, 7, 13),
    11: (1, 11, 13, 17, 7, 5),
    13: (1, 13, 7, 1, 13, 7),
    17: (1, 17, 1, 17, 1, 17),
}

coprime6 = st.integers(min_value=0, max_value=10**30).map(
    lambda x: 6 * x + (1 if x % 2 == 0 else 5)
)


def test_strip_factors_known_values():
    norm = strip_factors(12996)  # 12996 == 4 * 9 * 361
    assert (norm.k, norm.l, norm.core) == (2, 2, 361)
    assert (strip_factors(361).k, strip_factors(361).l, strip_factors(361).core) == (0, 0, 361)
    assert (strip_factors(6).k, strip_factors(6).l, strip_factors(6).core) == (1, 1, 1)
    assert (strip_factors(1).k, strip_factors(1).l, strip_factors(1).core) == (0, 0, 1)


def test_strip_factors_rejects_zero():
    with pytest.raises(ValueError):
        strip_factors(0)


@given(st.integers(min_value=1, max_value=10**30))
def test_strip_factors_reconstructs(m):
    norm = strip_factors(m)
    assert norm.reconstruct() == m
    assert norm.core % 2 == 1
    assert norm.core % 3 != 0


def test_residue_class_known_values():
    assert residue_class_of(512346251) == 11
    assert residue_class_of(625) == 13
    assert residue_class_of(1) == 1


def test_residue_class_exhaustive_oracle():
    for n in range(1, 100_001):
        if n % 2 == 0 or n % 3 == 0:
            continue
        assert residue_class_of(n) == n % 18, n


@pytest.mark.parametrize("bad", [0, 2, 3, 9, 15, 100])
def test_residue_class_rejects_non_coprime(bad):
    with pytest.raises(ValueError):
        residue_class_of(bad)


def test_power_table_matches_direct_exponentiation():
    for a in U18:
        for col in range(6):
            assert u18_power_table(a, col) == POWER_TABLE[a][col]
            assert u18_power_table(a, col) == pow(a, col, 18)


def test_power_table_known_values():
    assert u18_power_table(5, 4) == 13  # 5**4 == 625 == 13 mod 18
    for a in U18:
        assert u18_power_table(a, 0) == 1
    assert u18_power_table(17, 3) == 17


@given(st.sampled_from(U18), st.integers(min_value=0, max_value=1000))
def test_power_table_periodicity(a, e):
    assert u18_power_table(a, e) == pow(a, e, 18)
    assert u18_power_table(a, e) == u18_power_table(a, e + 6)


def test_power_table_rejects_bad_inputs():
    with pytest.raises(ValueError):
        u18_power_table(2, 2)
    with pytest.raises(ValueError):
        u18_power_table(5, -1)


def test_candidates_known_values():
    assert candidates_for_root(7, 2).a_values == (5, 13)
    assert candidates_for_root(1, 3).a_values == (1, 7, 13)
    assert candidates_for_root(17, 2).a_values == ()
    assert not candidates_for_root(17, 2)


def test_candidates_match_power_table():
    for e in range(2, 14):
        for cls in U18:
            cand = candidates_for_root(cls, e)
            assert cand.a_values == tuple(sorted(cand.a_values))
            for a in U18:
                assert (a in cand.a_values) == (u18_power_table(a, e) == cls)


def test_candidate_branch_counts():
    # candidate-set sizes depend only on the exponent mod 6
    expected = {0: 6, 1: 1, 2: 2, 3: 3, 4: 2, 5: 1}
    for e in range(2, 14):
        sizes = {len(candidates_for_root(cls, e).a_values) for cls in U18}
        assert sizes <= {0, expected[e % 6]}
        nonempty = [cls for cls in U18 if candidates_for_root(cls, e)]
        assert len(nonempty) * expected[e % 6] == 6


def test_root_feasible():
    assert root_feasible(strip_factors(4 * 9 * 361), 2)
    assert not root_feasible(strip_factors(2 * 5), 2)
    assert root_feasible(strip_factors(2**3 * 3**6), 3)
    assert not root_feasible(strip_factors(2**3 * 3**4), 3)
