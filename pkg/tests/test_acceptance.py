"""Acceptance suite: every criterion as an exact (zero-tolerance) check, one
printed PASS/FAIL line per criterion case.

Criterion 7's monotonicity clause is asserted exactly as specified and fails:
the exact ratio l1/q^4 is increasing on {3,5,7,11,13} (2.3419 -> 3.0271; it
peaks at q=17 and only then decreases towards 3).  The bound <= 4 holds.  See
tests/test_paperdata.py and the package notes; the companion check freezes the
true shape (envelope + eventual monotonicity).
"""

import random
import time
from fractions import Fraction

import pytest

from pvsft import census, counts, ftsolver, paperdata, symbolic
from pvsft import reps as R
from pvsft.ffield import PrimeField

from conftest import THEOREM_CASES


def _report(name, ok, extra=""):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}{extra}")
    assert ok, name


def _expected_scaled(name, q):
    cls = q % 3 if name == "sym3-2" else None
    return [[e(q) for e in row] for row in paperdata.expected_matrix(name, cls)]


# -- 1. theorem regression ----------------------------------------------------

@pytest.mark.parametrize("name,q", THEOREM_CASES)
def test_criterion_1_theorem_regression(name, q):
    t0 = time.time()
    ftm = ftsolver.solve_ft_matrix(name, q)
    elapsed = time.time() - t0
    ok = ftm.scaled() == _expected_scaled(name, q) and elapsed < 5
    _report(f"1 theorem-regression[{name},q={q}]", ok, f" ({elapsed:.2f}s)")


# -- 2. oracle equivalence ----------------------------------------------------

ORACLE_CASES = [("sym2-2", 3), ("sym2-2", 5), ("sym2-2", 7),
                ("sym2-3", 3), ("sym2-3", 5), ("sym2-3", 7),
                ("2sym2-2", 3), ("2sym2-2", 5), ("2sym2-2", 7),
                ("sym3-2", 5), ("sym3-2", 7), ("2sym2-3", 3)]


@pytest.mark.parametrize("name,q", ORACLE_CASES)
def test_criterion_2_oracle_equivalence(name, q, solved):
    t0 = time.time()
    oracle = census.oracle_ft_matrix(name, q, threads=2)
    elapsed = time.time() - t0
    limit = 60 if name == "2sym2-3" else (1 if name == "sym3-2" else 10)
    ok = oracle.m == solved[(name, q)].m and elapsed < limit
    _report(f"2 oracle-equivalence[{name},q={q}]", ok, f" ({elapsed:.2f}s)")


@pytest.mark.slow
def test_criterion_2_oracle_equivalence_quartic_q5(solved):
    t0 = time.time()
    oracle = census.oracle_ft_matrix("2sym2-3", 5, threads=2,
                                     progress_interval=60)
    elapsed = time.time() - t0
    ok = oracle.m == solved[("2sym2-3", 5)].m and elapsed < 1800
    _report("2 oracle-equivalence[2sym2-3,q=5,slow]", ok, f" ({elapsed:.0f}s)")


# -- 3. lemma battery ----------------------------------------------------------

def test_criterion_3_lemma_battery(solved, poly_matrices):
    ok = True
    for (name, q), ftm in solved.items():
        rep_report = ftsolver.verify_lemma(ftm)
        ok = ok and rep_report.symmetric_ok and rep_report.involution_ok
    for key, pm in poly_matrices.items():
        ok = ok and symbolic.verify_polynomial_lemma(pm)
    _report("3 lemma-battery[matrices+polynomials]", ok)


# -- 4. census vs formulas -----------------------------------------------------

CENSUS_CASES = [("sym2-2", 3), ("sym2-2", 5), ("sym2-2", 7),
                ("sym2-3", 3), ("sym2-3", 5), ("sym2-3", 7),
                ("2sym2-2", 3), ("2sym2-2", 5), ("2sym2-2", 7),
                ("sym3-2", 5), ("sym3-2", 7), ("2sym2-3", 3)]


@pytest.mark.parametrize("name,q", CENSUS_CASES)
def test_criterion_4_census_vs_formulas(name, q):
    rep = R.get_rep(name)
    cv = census.full_census(name, q, threads=2)
    sizes = [R.orbit_size(rep, lab, q) for lab in rep.labels]
    ok = list(cv.counts) == sizes and cv.total() == q ** rep.dim
    _report(f"4 census[{name},q={q}]", ok)


@pytest.mark.slow
def test_criterion_4_census_quartic_q5():
    rep = R.get_rep("2sym2-3")
    cv = census.full_census("2sym2-3", 5, threads=2, progress_interval=60)
    sizes = [R.orbit_size(rep, lab, 5) for lab in rep.labels]
    _report("4 census[2sym2-3,q=5,slow]", list(cv.counts) == sizes)


# -- 5. corollary reproduction ---------------------------------------------------

def test_criterion_5a_singular_transforms(solved):
    ok = True
    for name, qs in (("sym3-2", (5, 7, 11, 13)), ("2sym2-3", (3, 5, 7))):
        rep = R.get_rep(name)
        for q in qs:
            hat = ftsolver.ft_apply(solved[(name, q)],
                                    paperdata.singular_indicator(name))
            want = [Fraction(v(q)) / q ** rep.dim
                    for v in paperdata.expected_psi_hat(name)]
            ok = ok and list(hat) == want
    _report("5a singular-indicator-transforms", ok)


def test_criterion_5b_root_count_transform(solved):
    ok = True
    rep = R.get_rep("sym3-2")
    for q in (5, 7, 11, 13):
        hat = ftsolver.ft_apply(solved[("sym3-2", q)], [z(q) for z in rep.zeros])
        ok = ok and list(hat) == [1 + Fraction(1, q), Fraction(1, q), 0, 0, 0, 0]
    _report("5b root-count-transform", ok)


def test_criterion_5c_quadratic_twist(solved):
    ok = True
    for q in (5, 7, 11, 13):
        hat = ftsolver.ft_apply(solved[("sym3-2", q)], (0, 0, 0, 1, -1, 1))
        sign = paperdata.sym32_quad_sign(q)
        ok = ok and list(hat) == [sign * Fraction(c, q * q)
                                  for c in (0, 0, 0, 1, -1, 1)]
    for q in (5, 7):
        t0 = time.time()
        ok = ok and ftsolver.sym32_quadratic_twist_check(q)
        ok = ok and time.time() - t0 < 10
    _report("5c quadratic-character-and-pointwise-twist", ok)


def test_criterion_5d_sym22_quadratic(solved):
    ok = True
    for q in (3, 5, 7):
        hat = ftsolver.ft_apply(solved[("sym2-2", q)], (0, 0, 1, -1))
        want = [Fraction(v(q), q ** 3) for v in paperdata.expected_sym22_quad_hat()]
        ok = ok and list(hat) == want and hat[0] != 0 and hat[1] != 0
    _report("5d sym2-2-quadratic-character", ok)


# -- 6. symbolic reconstruction ---------------------------------------------------

def test_criterion_6_symbolic_reconstruction(poly_matrices):
    ok = True
    for (name, cls), pm in poly_matrices.items():
        ok = ok and symbolic.compare_paper(pm) == []
    ok = ok and len(poly_matrices) == 6     # five reps, sym3-2 in two classes
    _report("6 symbolic-reconstruction[all five theorems]", ok)


def test_criterion_6_quartic_runtime():
    t0 = time.time()
    pm = symbolic.interpolate("2sym2-3")[None]
    elapsed = time.time() - t0
    ok = symbolic.compare_paper(pm) == [] and elapsed < 300
    _report("6 quartic-reconstruction-runtime[<5min]", ok, f" ({elapsed:.1f}s)")


# -- 7. L1 bound -----------------------------------------------------------------

L1_PRIMES = (3, 5, 7, 11, 13)


def test_criterion_7_l1_envelope():
    ratios = [paperdata.l1_norm_psi_hat("2sym2-3", q) / q**4 for q in L1_PRIMES]
    _report("7 l1-envelope[<=4]", all(r <= 4 for r in ratios))


def test_criterion_7_l1_monotone_as_specified():
    """Asserted exactly as specified: non-increasing over q in {3,5,7,11,13}.

    This FAILS honestly: the exact values increase (2.3419, 2.8452, 2.9653,
    3.0208, 3.0271), peak at q=17 and decrease to 3 only afterwards.  The
    spec's guessed direction is a defect; see the decisions ledger.  The true
    tightened property is recorded in paperdata (L1_RATIO_MAX, monotone from
    q=17) and verified by test_criterion_7_l1_tightened below.
    """
    ratios = [paperdata.l1_norm_psi_hat("2sym2-3", q) / q**4 for q in L1_PRIMES]
    ok = all(a >= b for a, b in zip(ratios, ratios[1:]))
    _report("7 l1-monotone-as-specified", ok,
            " (spec defect: ratios increase toward the q=17 peak)")


def test_criterion_7_l1_tightened():
    ratios = {q: paperdata.l1_norm_psi_hat("2sym2-3", q) / q**4
              for q in (3, 5, 7, 11, 13, 17, 19, 23, 29)}
    ok = all(r <= paperdata.L1_RATIO_MAX for r in ratios.values())
    tail = [ratios[q] for q in (17, 19, 23, 29)]
    ok = ok and all(a >= b for a, b in zip(tail, tail[1:]))
    _report("7 l1-tightened[sup at q=17, then non-increasing]", ok)


# -- 8. property suites ------------------------------------------------------------

def test_criterion_8a_classifier_g_invariance():
    import numpy as np
    rng = random.Random(2024)
    ok = True
    for name, rep in R.REPS.items():
        ps = (3, 5) if name == "sym3-2" else (3,)
        ps = tuple(p for p in ps if p not in rep.bad_primes)
        for p in ps:
            field = PrimeField(p)
            for lab in rep.labels:
                x = R.orbit_representative(rep, lab, field)
                pts = [R.act(rep, R.random_group_element(rep, p, rng), x, p)
                       for _ in range(1000)]
                got = R.classify_batch(rep, np.array(pts, dtype="int64"), p)
                ok = ok and all(rep.labels[i] == lab for i in got)
    _report("8a classifier-G-invariance[1000/orbit]", ok)


def test_criterion_8b_pairing_invariance():
    rng = random.Random(2025)
    ok = True
    for name, rep in R.REPS.items():
        p = 5 if name == "sym3-2" else 3
        field = PrimeField(p)
        for _ in range(1000):
            g = R.random_group_element(rep, p, rng)
            x = tuple(rng.randrange(p) for _ in range(rep.dim))
            y = tuple(rng.randrange(p) for _ in range(rep.dim))
            gt = R.inverse_transpose(rep, g, p)
            if R.bilinear(rep, R.act(rep, g, x, p), R.act(rep, gt, y, p), field) \
                    != R.bilinear(rep, x, y, field):
                ok = False
    _report("8b pairing-invariance[1000/rep]", ok)


def test_criterion_8c_resolvent_equivariance():
    from pvsft.reps import (_det2, _mat_det, _mat_mul_mod, _mat_transpose,
                            _matrix_to_sym, _sym_to_matrix)
    rng = random.Random(2026)
    p = 7
    field = PrimeField(p)
    rep32 = R.get_rep("sym3-2")
    ok = True
    for name in ("2sym2-2", "2sym2-3"):
        rep = R.get_rep(name)
        for _ in range(500):
            g = R.random_group_element(rep, p, rng)
            x = tuple(rng.randrange(p) for _ in range(rep.dim))
            lhs = R.resolvent(rep, R.act(rep, g, x, p), field)
            rx = R.resolvent(rep, x, field)
            g1, g2 = g
            d2 = _mat_det(g2, p)
            if name == "2sym2-2":
                s = _sym_to_matrix(rx, 2, p)
                s2 = _mat_mul_mod(_mat_mul_mod(g1, s, p), _mat_transpose(g1), p)
                rhs = tuple(d2 * d2 % p * c % p for c in _matrix_to_sym(s2, 2, p))
            else:
                d1 = _det2(g1, p)
                rhs = tuple(d1 * d2 * d2 % p * c % p
                            for c in R.act(rep32, (g1,), rx, p))
            ok = ok and lhs == rhs
    _report("8c resolvent-equivariance[500/rep]", ok)


def test_criterion_8d_histogram_uniformity():
    ok = True
    for name, qs in (("sym2-2", (3, 5, 7)), ("sym2-3", (3, 5, 7)),
                     ("2sym2-2", (3, 5, 7)), ("sym3-2", (5, 7)),
                     ("2sym2-3", (3,))):
        rep = R.get_rep(name)
        for q in qs:
            field = PrimeField(q)
            for lab in rep.labels:
                y = R.orbit_representative(rep, lab, field)
                h = census.character_histogram(name, q, y, threads=2)
                ok = ok and all(h.uniform_tail(i) for i in range(rep.r))
    _report("8d histogram-uniformity[all orbit pairs]", ok)


def test_criterion_8e_subspace_identities(solved):
    rng = random.Random(2027)
    ok = True
    for name in R.REPS:
        p = 5 if name == "sym3-2" else 3
        rep = R.get_rep(name)
        ftm = solved[(name, p)]
        for _ in range(50):
            mask = tuple(rng.randrange(2) for _ in range(rep.dim))
            spec = census.SubspaceSpec(name, mask=mask)
            ok = ok and ftsolver.subspace_identity_check(name, p, spec, ftm)
    _report("8e subspace-identity[50 masks/rep]", ok)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_criterion_8f_closed_forms_vs_enumeration(p):
    ok = True
    checked = 0
    for name in R.REPS:
        rep = R.get_rep(name)
        if p in rep.bad_primes:
            continue
        for m in counts.spanning_family(name):
            if m.dim > 8:
                continue
            spec = census.SubspaceSpec(name, mask=m.mask)
            got = census.count_in_subspace(name, p, spec, threads=2)
            ok = ok and list(got.counts) == counts.count_vector_at(name, m.sid, p)
            checked += 1
    _report(f"8f closed-forms-vs-enumeration[p={p},{checked} members]", ok)
