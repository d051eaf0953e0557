import json

import pytest

from pvsft import paperdata, symbolic
from pvsft.qpoly import Q, QPoly
from pvsft.reps import get_rep
from pvsft.symbolic import (PolyMatrix, compare_paper, interpolate, render,
                            sample_primes, verify_polynomial_lemma)


def test_sample_primes():
    assert sample_primes("sym2-2") == [3, 5, 7, 11, 13]
    assert sample_primes("sym3-2", cls=1) == [7, 13, 19, 31, 37, 43]
    assert sample_primes("sym3-2", cls=2) == [5, 11, 17, 23, 29, 41]
    assert len(sample_primes("2sym2-3")) == 14
    assert 2 not in sample_primes("sym2-3") and 3 in sample_primes("sym2-3")


def test_interpolate_small_reps(poly_matrices):
    for key, pm in poly_matrices.items():
        assert compare_paper(pm) == [], key
        # round trip at every sample prime, holdout included
        exp = paperdata.expected_matrix(pm.rep, pm.cls)
        for p in pm.sample_primes:
            for i in range(pm.r):
                for j in range(pm.r):
                    assert pm.grid[i][j](p) == exp[i][j](p)


def test_interpolated_entry_examples(poly_matrices):
    pm = poly_matrices[("sym3-2", 1)]
    assert pm.grid[3][3] == Q * (5 + Q) / 6
    assert pm.grid[0][0] == QPoly.const(1)
    pmq = poly_matrices[("2sym2-3", None)]
    phi2 = QPoly((1, 1, 1))
    assert pmq.grid[0][19] == (Q - 1) ** 4 * Q**4 * (Q + 1) ** 2 * phi2 / 4


def test_polynomial_lemma(poly_matrices):
    for key, pm in poly_matrices.items():
        assert verify_polynomial_lemma(pm), key


def test_degree_bound(poly_matrices):
    for (name, _), pm in poly_matrices.items():
        dim = get_rep(name).dim
        assert all(e.degree <= dim for row in pm.grid for e in row)
        # the (O_0, O_j) row is exactly the size polynomials
        assert tuple(pm.grid[0]) == get_rep(name).sizes


def test_compare_paper_fault_injection(poly_matrices):
    pm = poly_matrices[("sym2-2", None)]
    grid = [list(row) for row in pm.grid]
    grid[1][2] = grid[1][2] + 1
    bad = PolyMatrix(pm.rep, pm.cls, tuple(tuple(r) for r in grid))
    diff = compare_paper(bad)
    assert len(diff) == 1
    assert (diff[0]["row"], diff[0]["col"]) == (1, 2)
    assert diff[0]["col_orbit"] == "(11)"


def test_holdout_mismatch_detected(monkeypatch):
    from fractions import Fraction
    from pvsft import ftsolver

    real_solve = ftsolver.solve_ft_matrix

    def corrupted(rep, q, provider=None, method="table"):
        ftm = real_solve(rep, q, provider=provider, method=method)
        if q == 7:       # a non-holdout sample prime
            rows = [list(r) for r in ftm.m]
            rows[1][2] += Fraction(1, q ** ftm.dim)
            return ftsolver.FTMatrix.from_entries(ftm.rep, q, rows, ftm.method)
        return ftm

    monkeypatch.setattr(symbolic.ftsolver, "solve_ft_matrix", corrupted)
    with pytest.raises(ValueError, match="holdout|degree"):
        interpolate("sym2-2")


def test_render_latex():
    assert symbolic._latex_entry(QPoly.const(1)) == "1"
    assert symbolic._latex_entry(Q**3 - Q) == "[111]"
    f = (Q - 1) ** 4 * Q**4 * (Q + 1) ** 2 * QPoly((1, 1, 1)) / 4
    assert symbolic._latex_entry(f) == "\\tfrac{1}{4}[442]\\phi_2"
    assert symbolic._latex_entry(Q**2 + 1) == "q^2 + 1"


def test_render_formats(poly_matrices):
    pm = poly_matrices[("sym2-2", None)]
    latex = render(pm, "latex")
    assert "\\begin{bmatrix}" in latex
    j = json.loads(render(pm, "json"))
    assert j["scale"] == "q^3"
    assert j["matrix_scaled_polynomials"][3][1] == "-q - 1"
    csv = render(pm, "csv")
    assert csv.splitlines()[0] == "rep,class,row,col,row_orbit,col_orbit,polynomial"
    # deterministic output
    assert render(pm, "json") == render(pm, "json")
