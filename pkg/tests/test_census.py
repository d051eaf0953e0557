from fractions import Fraction

import pytest

from pvsft import reps
from pvsft.census import (BudgetExceededError, SubspaceSpec, character_histogram,
                          count_in_subspace, full_census, oracle_ft_matrix)
from pvsft.ffield import PrimeField
from pvsft.reps import get_rep, orbit_representative, orbit_size


def sizes_at(name, q):
    rep = get_rep(name)
    return [orbit_size(rep, lab, q) for lab in rep.labels]


def test_full_census_examples():
    assert list(full_census("sym2-2", 3).counts) == [1, 8, 12, 6]
    assert list(full_census("sym3-2", 5).counts) == [1, 24, 120, 80, 240, 160]


def test_full_census_quartic_q3():
    cv = full_census("2sym2-3", 3, threads=2)
    assert list(cv.counts) == sizes_at("2sym2-3", 3)
    assert cv.total() == 3 ** 12
    assert cv.counts[reps.PAIR23_LABELS.index("1111")] == 11232


def test_census_matches_sizes_small():
    for name, ps in [("sym2-2", (3, 5, 7)), ("sym2-3", (3, 5, 7)),
                     ("sym3-2", (5, 7)), ("2sym2-2", (3, 5, 7))]:
        for p in ps:
            assert list(full_census(name, p).counts) == sizes_at(name, p)


def test_census_thread_determinism():
    a = full_census("2sym2-2", 5, threads=1)
    b = full_census("2sym2-2", 5, threads=3)
    assert a.counts == b.counts


def test_count_in_subspace_examples():
    got = count_in_subspace("sym3-2", 5, SubspaceSpec("sym3-2", mask=(0, 0, 1, 1)))
    assert list(got.counts) == [1, 4, 20, 0, 0, 0]
    got = count_in_subspace("2sym2-2", 3,
                            SubspaceSpec("2sym2-2", mask=(0, 0, 1, 1, 1, 1)))
    assert list(got.counts) == [1, 14, 12, 6, 12, 36, 0]
    got = count_in_subspace("2sym2-3", 3,
                            SubspaceSpec("2sym2-3", mask=(0,) * 12))
    assert list(got.counts) == [1] + [0] * 19


def test_count_in_subspace_full_mask_is_census():
    for name in ("sym2-2", "sym3-2"):
        p = 5
        rep = get_rep(name)
        spec = SubspaceSpec(name, mask=(1,) * rep.dim)
        assert count_in_subspace(name, p, spec).counts == full_census(name, p).counts


def test_count_in_subspace_basis():
    # basis enumeration agrees with the equivalent mask
    spec_b = SubspaceSpec("sym2-2", basis=((0, 0, 1), (0, 1, 0)))
    spec_m = SubspaceSpec("sym2-2", mask=(0, 1, 1))
    assert count_in_subspace("sym2-2", 5, spec_b).counts == \
        count_in_subspace("sym2-2", 5, spec_m).counts


def test_budget_refusal():
    with pytest.raises(BudgetExceededError) as err:
        full_census("2sym2-3", 3, budget=1000)
    assert err.value.needed == 3 ** 12


def test_character_histogram_zero_dual():
    h = character_histogram("sym2-2", 3, (0, 0, 0))
    for i, lab in enumerate(get_rep("sym2-2").labels):
        assert h.table[i][0] == orbit_size(get_rep("sym2-2"), lab, 3)
        assert all(v == 0 for v in h.table[i][1:])


def test_character_histogram_uniform_tails():
    field = PrimeField(3)
    rep = get_rep("sym2-2")
    y = orbit_representative(rep, "(1^2)", field)
    h = character_histogram("sym2-2", 3, y)
    for i in range(rep.r):
        assert h.uniform_tail(i)
        assert sum(h.table[i]) == orbit_size(rep, rep.labels[i], 3)


def test_histogram_reconstructs_matrix_row():
    # y = v^3 lies in (1^3); reconstructed values match the theorem row
    from pvsft import paperdata
    field = PrimeField(5)
    rep = get_rep("sym3-2")
    y = orbit_representative(rep, "(1^3)", field)
    h = character_histogram("sym3-2", 5, y)
    expected = paperdata.expected_matrix("sym3-2", 5 % 3)
    for j in range(rep.r):
        val = Fraction(h.table[j][0] - h.table[j][1], 5 ** 4)
        assert val == Fraction(expected[1][j](5)) / 5 ** 4


def test_oracle_matrix_sym22_q3_exact():
    m = oracle_ft_matrix("sym2-2", 3)
    want = [[1, 8, 12, 6], [1, -1, 3, -3], [1, 2, -3, 0], [1, -4, 0, 3]]
    assert m.scaled() == [[Fraction(v) for v in row] for row in want]


def test_oracle_first_row_and_column():
    for name, p in (("sym2-2", 5), ("sym2-3", 3), ("2sym2-2", 3)):
        m = oracle_ft_matrix(name, p)
        scaled = m.scaled()
        assert scaled[0] == [Fraction(s) for s in sizes_at(name, p)]
        assert all(row[0] == 1 for row in scaled)
