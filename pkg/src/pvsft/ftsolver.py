"""Assemble and solve the subspace-average linear system for the Fourier
matrix M, and run the verification battery (symmetry, involution, subspace
identities, the distinguished transforms, the quadratic-twist summation).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import census, counts, exactla
from . import reps as R

log = logging.getLogger("pvsft")


class UnsolvableError(RuntimeError):
    pass


@dataclass
class FTMatrix:
    """Exact r x r Fourier matrix of one representation at one prime.

    m holds the unscaled entries a_ij (Fractions); scaled() gives q^dim * M,
    whose entries' denominators divide 24 (they are integers for every
    theorem matrix at a good odd q).
    """

    rep: str
    q: int
    labels: tuple
    sizes: tuple
    m: tuple
    method: str = "table"

    @staticmethod
    def from_entries(rep, q, m, method):
        rep = R.get_rep(rep) if isinstance(rep, str) else rep
        sizes = tuple(R.orbit_size(rep, lab, q) for lab in rep.labels)
        return FTMatrix(rep.name, q, rep.labels, sizes,
                        tuple(tuple(Fraction(x) for x in row) for row in m), method)

    @property
    def r(self):
        return len(self.labels)

    @property
    def dim(self):
        return R.get_rep(self.rep).dim

    def scaled(self):
        s = self.q ** self.dim
        return [[x * s for x in row] for row in self.m]

    def __eq__(self, other):
        return (isinstance(other, FTMatrix) and self.rep == other.rep
                and self.q == other.q and self.m == other.m)

    def to_json_dict(self):
        def fr(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {
            "rep": self.rep,
            "q": self.q,
            "dim": self.dim,
            "scale": f"q^{self.dim}",
            "orbit_labels": list(self.labels),
            "orbit_sizes": [str(s) for s in self.sizes],
            "matrix_scaled": [[fr(x) for x in row] for row in self.scaled()],
        }

    def to_csv(self):
        lines = ["rep,q,row,col,row_orbit,col_orbit,scaled_entry"]
        for i, row in enumerate(self.scaled()):
            for j, x in enumerate(row):
                lines.append(f'{self.rep},{self.q},{i},{j},"{self.labels[i]}",'
                             f'"{self.labels[j]}",{x}')
        return "\n".join(lines) + "\n"

    def to_latex(self):
        rows = [" & ".join(str(x) for x in row) for row in self.scaled()]
        body = " \\\\\n".join(rows)
        return (f"% {self.rep}, q={self.q}: the matrix q^{{{self.dim}}} M\n"
                "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}\n")


@dataclass
class OrbitFunction:
    rep: str
    coeffs: tuple

    def __post_init__(self):
        rep = R.get_rep(self.rep)
        if len(self.coeffs) != rep.r:
            raise ValueError("coefficient count must equal the orbit count")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))


def _family_rows(rep, q, provider):
    """(u_W, q^dimW * u_Wperp) pairs for the spanning family."""
    sizes = [R.orbit_size(rep, lab, q) for lab in rep.labels]
    rows = []
    for member in counts.spanning_family(rep.name):
        cw = provider.count_vector(member.sid, q)
        cperp = provider.count_vector(member.dual, q)
        u = [Fraction(c, s) for c, s in zip(cw, sizes)]
        rhs = [Fraction(c * q ** member.dim, s) for c, s in zip(cperp, sizes)]
        rows.append((member.sid, u, rhs))
    return rows


def _random_mask_rows(rep, q, rng, provider_threads=None):
    """Fallback rows from enumerated random coordinate masks (logged loudly)."""
    mask = tuple(rng.randrange(2) for _ in range(rep.dim))
    spec = census.SubspaceSpec(rep.name, mask=mask)
    cw = census.count_in_subspace(rep.name, q, spec, threads=provider_threads).counts
    wperp = tuple(1 - b for b in mask)
    cperp = census.count_in_subspace(
        rep.name, q, census.SubspaceSpec(rep.name, mask=wperp)).counts
    sizes = [R.orbit_size(rep, lab, q) for lab in rep.labels]
    u = [Fraction(c, s) for c, s in zip(cw, sizes)]
    rhs = [Fraction(c * q ** sum(mask), s) for c, s in zip(cperp, sizes)]
    return f"random-mask{mask}", u, rhs


def solve_ft_matrix(rep, q, provider=None, method="table"):
    """Solve U M^T = Vmat exactly from a spanning family of subspace counts."""
    rep = R.get_rep(rep) if isinstance(rep, str) else rep
    rep.check_prime(q)
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if provider is None:
        provider = (counts.FormulaProvider(rep.name) if method == "table"
                    else counts.EnumerationProvider(rep.name, q))
    rows = _family_rows(rep, q, provider)

    # select independent rows (first-come), topping up with random masks if the
    # family ever degenerates -- that path must never fire silently
    def rank_of(mat):
        m = [list(map(Fraction, r)) for r in mat]
        rank = 0
        ncols = len(m[0])
        for c in range(ncols):
            piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            pv = m[rank][c]
            m[rank] = [x / pv for x in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
            rank += 1
        return rank

    chosen = []
    for row in rows:
        if rank_of([r[1] for r in chosen] + [row[1]]) > len(chosen):
            chosen.append(row)
    if len(chosen) < rep.r:
        import random
        rng = random.Random(12345)
        log.warning("spanning family for %s at q=%d is rank-deficient (%d/%d); "
                    "augmenting with enumerated random coordinate subspaces",
                    rep.name, q, len(chosen), rep.r)
        for _ in range(8 * rep.dim):
            row = _random_mask_rows(rep, q, rng)
            if rank_of([r[1] for r in chosen] + [row[1]]) > len(chosen):
                chosen.append(row)
            if len(chosen) == rep.r:
                break
        if len(chosen) < rep.r:
            raise UnsolvableError(
                f"could not reach rank {rep.r} for {rep.name} at q={q}")
    u_mat = [row[1] for row in chosen]
    v_mat = [row[2] for row in chosen]
    try:
        x = exactla.solve_exact(u_mat, v_mat)
    except exactla.SingularSystemError as exc:
        raise UnsolvableError(f"singular system for {rep.name} at q={q}") from exc
    m_scaled = exactla.mat_transpose(x)
    scale = q ** rep.dim
    m = [[Fraction(e, 1) / scale for e in row] for row in m_scaled]
    out = FTMatrix.from_entries(rep, q, m, method=provider.source)
    _check_denominators(out)
    return out


def _check_denominators(ftm):
    for row in ftm.scaled():
        for x in row:
            if 24 % x.denominator != 0:
                raise AssertionError(
                    f"scaled entry {x} of {ftm.rep}@q={ftm.q} has a denominator "
                    "outside the theorem range")


@dataclass
class LemmaReport:
    symmetric_ok: bool
    involution_ok: bool

    def ok(self):
        return self.symmetric_ok and self.involution_ok


def verify_lemma(ftm):
    """Check S M symmetric and M^2 = q^-dim I, exactly."""
    r = ftm.r
    m = ftm.m
    sizes = ftm.sizes
    sym = all(sizes[i] * m[i][j] == sizes[j] * m[j][i]
              for i in range(r) for j in range(r))
    target = Fraction(1, ftm.q ** ftm.dim)
    inv = True
    for i in range(r):
        for j in range(r):
            acc = sum(m[i][k] * m[k][j] for k in range(r))
            if acc != (target if i == j else 0):
                inv = False
                break
        if not inv:
            break
    return LemmaReport(sym, inv)


def ft_apply(ftm, f):
    """Coefficients of the transform of f = sum f_j e_j, i.e. M f."""
    coeffs = f.coeffs if isinstance(f, OrbitFunction) else [Fraction(c) for c in f]
    if len(coeffs) != ftm.r:
        raise ValueError("dimension mismatch")
    return tuple(sum(ftm.m[i][j] * coeffs[j] for j in range(ftm.r))
                 for i in range(ftm.r))


def subspace_identity_check(rep, p, spec, ftm, threads=None):
    """Verify the subspace-average identity M u_W = (|W|/|V|) u_Wperp with
    enumerated counts on both sides (W given by a coordinate mask or basis)."""
    rep = R.get_rep(rep) if isinstance(rep, str) else rep
    sizes = [R.orbit_size(rep, lab, p) for lab in rep.labels]
    cw = census.count_in_subspace(rep.name, p, spec, threads=threads).counts
    if spec.mask is not None:
        perp_spec = census.SubspaceSpec(rep.name, mask=tuple(1 - b for b in spec.mask))
    else:
        sub = exactla.FpSubspace(p, rep.dim, spec.basis)
        perp = exactla.orth_complement(sub, R.pairing_weights(rep))
        perp_spec = census.SubspaceSpec(rep.name, basis=perp.basis)
    cperp = census.count_in_subspace(rep.name, p, perp_spec, threads=threads).counts
    u = [Fraction(c, s) for c, s in zip(cw, sizes)]
    uperp = [Fraction(c, s) for c, s in zip(cperp, sizes)]
    ratio = Fraction(p ** spec.dim, p ** rep.dim)
    lhs = ft_apply(ftm, u)
    return all(l == ratio * up for l, up in zip(lhs, uperp))


# --- standalone corollary checks --------------------------------------------

def sym32_quadratic_twist_check(p):
    """Direct character-sum verification of the quadratic-twist identity for
    binary cubics: for every y, q^-4 sum_x psi(disc x) <x,y> = q^-2 psi(-disc(y)/27).

    Exact: residue counts of [x,y] grouped by psi(disc x) must be uniform over
    nonzero residues, and c_0 - c_1 must equal q^2 psi(disc*(y)).
    """
    rep = R.get_rep("sym3-2")
    rep.check_prime(p)
    n = p ** 4
    coords = census._decode_range(p, 4, 0, n)
    a, b, c, d = (coords[:, k] for k in range(4))
    bc = b * c % p
    ad = a * d % p
    dsc = (bc * bc + 18 * ad * bc - 4 * (a * c % p) * (c * c % p)
           - 4 * (b * b % p) * (b * d % p) - 27 * ad * ad) % p
    tb = R.classify_tables(rep.name, p)
    psi = tb.legendre[dsc].astype(np.int64)       # psi(disc x), with psi(0)=0
    disc_star = (-dsc * pow(27, p - 2, p)) % p    # -disc/27, the dual invariant
    psi_star = tb.legendre[disc_star].astype(np.int64)
    wy = census._pairing_matrix(rep, p, [tuple(int(v) for v in coords[i])
                                         for i in range(n)])
    resid = R._matmod(coords, wy, p)              # resid[x, y] = [x, y]
    csum = np.zeros((p, n), dtype=np.int64)
    for k in range(p):
        csum[k] = psi @ (resid == k)
    tails = csum[1:]
    if not (tails == tails[0]).all():
        return False
    lhs = csum[0] - csum[1]
    return bool((lhs == p * p * psi_star).all())
