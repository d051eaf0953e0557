"""Reconstruct q^dim * M entrywise as exact polynomials in q by interpolation
over many primes, and compare with the transcribed theorem matrices.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from . import counts, ftsolver, paperdata
from . import reps as R
from .ffield import is_prime
from .qpoly import Q, ZERO, factor_small_roots, lagrange_interpolate


@dataclass
class PolyMatrix:
    rep: str
    cls: object          # congruence class (None or residue of q mod 3)
    grid: tuple          # r x r QPoly, scaled by q^dim
    sample_primes: tuple = ()
    holdout: int = None

    @property
    def r(self):
        return len(self.grid)

    def evaluate(self, q):
        """FTMatrix at q (q must lie in this congruence class)."""
        rep = R.get_rep(self.rep)
        scale = q ** rep.dim
        m = [[Fraction(e(q)) / scale for e in row] for row in self.grid]
        return ftsolver.FTMatrix.from_entries(rep, q, m, method="symbolic")


def sample_primes(rep_name, cls=None, count=None):
    """The first dim+2 odd primes valid for the representation (per class for
    binary cubics); the last one is reserved as the interpolation holdout."""
    rep = R.get_rep(rep_name)
    want = count or rep.dim + 2
    out = []
    p = 3
    while len(out) < want:
        if is_prime(p) and p not in rep.bad_primes and \
                (cls is None or p % rep.cong_modulus == cls):
            out.append(p)
        p += 2
    return out


def interpolate(rep_name, primes=None, provider_factory=None, classes=None):
    """PolyMatrix per congruence class from exact matrices at sample primes.

    All but the last prime interpolate each scaled entry (degree <= dim); the
    held-out prime must then evaluate exactly, else the degree bound (or a
    table) is wrong.
    """
    rep = R.get_rep(rep_name)
    if classes is None:
        classes = (1, 2) if rep.cong_modulus == 3 else (None,)
    out = {}
    for cls in classes:
        ps = list(primes) if primes is not None else sample_primes(rep_name, cls)
        if len(ps) < rep.dim + 2:
            raise ValueError(f"need at least dim+2={rep.dim + 2} primes, got {len(ps)}")
        mats = {}
        for p in ps:
            provider = (provider_factory(rep_name, p) if provider_factory
                        else counts.FormulaProvider(rep_name))
            mats[p] = ftsolver.solve_ft_matrix(rep_name, p, provider=provider)
        holdout = ps[-1]
        nodes = ps[:-1]
        grid = []
        for i in range(rep.r):
            row = []
            for j in range(rep.r):
                pts = [(p, mats[p].scaled()[i][j]) for p in nodes]
                poly = lagrange_interpolate(pts)
                if poly.degree > rep.dim:
                    raise ValueError(
                        f"degree bound violated at entry ({i},{j}) of {rep_name}: "
                        f"got degree {poly.degree} > dim {rep.dim}")
                if poly(holdout) != mats[holdout].scaled()[i][j]:
                    raise ValueError(
                        f"holdout prime {holdout} mismatch at entry ({i},{j}) of "
                        f"{rep_name} (class {cls}): transcription or classifier bug")
                row.append(poly)
            grid.append(tuple(row))
        out[cls] = PolyMatrix(rep_name, cls, tuple(grid), tuple(ps), holdout)
    return out


def compare_paper(pm):
    """Entrywise diff against the transcribed theorem matrix; [] when equal."""
    expected = paperdata.expected_matrix(pm.rep, pm.cls)
    diffs = []
    rep = R.get_rep(pm.rep)
    for i in range(pm.r):
        for j in range(pm.r):
            if pm.grid[i][j] != expected[i][j]:
                diffs.append({
                    "row": i, "col": j,
                    "row_orbit": rep.labels[i], "col_orbit": rep.labels[j],
                    "reconstructed": pm.grid[i][j].pretty(),
                    "transcribed": expected[i][j].pretty(),
                })
    return diffs


def verify_polynomial_lemma(pm):
    """S(q) M(q) symmetric and (q^d M)^2 = q^d I as polynomial identities."""
    rep = R.get_rep(pm.rep)
    sizes = rep.sizes
    for i in range(pm.r):
        for j in range(pm.r):
            if sizes[i] * pm.grid[i][j] != sizes[j] * pm.grid[j][i]:
                return False
    for i in range(pm.r):
        for j in range(pm.r):
            acc = ZERO
            for k in range(pm.r):
                acc = acc + pm.grid[i][k] * pm.grid[k][j]
            want = Q ** rep.dim if i == j else ZERO
            if acc != want:
                return False
    return True


def _latex_entry(poly):
    fac = factor_small_roots(poly)
    if fac is None:
        return poly.pretty().replace("*", " ")
    a, b, c, d, const = fac
    if (a, b, c, d) == (0, 0, 0, 0):
        return str(const)
    sign = "-" if const < 0 else ""
    const = abs(const)
    if const == 1:
        frac = ""
    elif const.denominator == 1:
        frac = str(const.numerator)
    else:
        frac = f"\\tfrac{{{const.numerator}}}{{{const.denominator}}}"
    body = f"[{a}{b}{c}]"
    if d:
        body += "\\phi_2" if d == 1 else f"\\phi_2^{d}"
    return sign + frac + body


def render(pm, fmt="latex"):
    """Deterministic emission of a PolyMatrix (latex / json / csv)."""
    rep = R.get_rep(pm.rep)
    if fmt == "latex":
        rows = [" & ".join(_latex_entry(e) for e in row) for row in pm.grid]
        head = f"% {pm.rep}" + (f", q = {pm.cls} (mod 3)" if pm.cls else "")
        head += f": the matrix q^{{{rep.dim}}} M, [abc] = (q-1)^a q^b (q+1)^c\n"
        return head + "\\begin{bmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{bmatrix}\n"
    if fmt == "json":
        obj = {
            "rep": pm.rep,
            "class": pm.cls,
            "scale": f"q^{rep.dim}",
            "orbit_labels": list(rep.labels),
            "sample_primes": list(pm.sample_primes),
            "holdout_prime": pm.holdout,
            "matrix_scaled_polynomials": [[e.pretty() for e in row]
                                          for row in pm.grid],
        }
        return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
    if fmt == "csv":
        lines = ["rep,class,row,col,row_orbit,col_orbit,polynomial"]
        for i, row in enumerate(pm.grid):
            for j, e in enumerate(row):
                cls = "" if pm.cls is None else pm.cls
                lines.append(f'{pm.rep},{cls},{i},{j},"{rep.labels[i]}",'
                             f'"{rep.labels[j]}","{e.pretty()}"')
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
