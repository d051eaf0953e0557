"""Exact dense linear algebra: rational solving, F_p rank / nullspace, and
orthogonal complements under a diagonal pairing.

Matrices are plain lists of rows; rational entries are fractions.Fraction.
Systems here are at most 20x20, so plain Gaussian elimination with the first
nonzero pivot is all we need (exactness makes pivot selection irrelevant).
"""

from dataclasses import dataclass
from fractions import Fraction


class SingularSystemError(Exception):
    def __init__(self, rank, size):
        super().__init__(f"singular system: rank {rank} < {size}")
        self.rank = rank
        self.size = size


def solve_exact(a, b):
    """Solve a.x = b exactly; a is n x n, b is n x m. Returns the n x m solution.

    Raises SingularSystemError (carrying the rank found) when a is singular.
    """
    n = len(a)
    m = len(b[0])
    aug = [[Fraction(x) for x in row_a] + [Fraction(x) for x in row_b]
           for row_a, row_b in zip(a, b)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularSystemError(rank, n)
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        rank += 1
    return [row[n:n + m] for row in aug]


def mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _rref_fp(rows, p):
    """Reduced row echelon form mod p; returns (rref rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_fp(rows, p):
    """Rank of an integer matrix over F_p."""
    return len(_rref_fp(rows, p)[0])


def nullspace_fp(rows, p, ncols=None):
    """Deterministic basis of the right nullspace mod p."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    rref, pivots = _rref_fp(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class FpSubspace:
    """Subspace of F_p^n given by an independent basis (rows)."""

    p: int
    n: int
    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(x % self.p for x in row) for row in self.basis)
        object.__setattr__(self, "basis", basis)
        if basis and rank_fp([list(b) for b in basis], self.p) != len(basis):
            raise ValueError("basis vectors are dependent over F_p")

    @property
    def dim(self):
        return len(self.basis)

    def rref_basis(self):
        """Canonical (RREF) basis, for comparing subspaces."""
        rows, _ = _rref_fp([list(b) for b in self.basis], self.p)
        return tuple(tuple(r) for r in rows)

    @staticmethod
    def from_mask(mask, p):
        n = len(mask)
        rows = [[int(i == j) for j in range(n)] for j, keep in enumerate(mask) if keep
                for i in [j]]
        return FpSubspace(p, n, tuple(tuple(r) for r in rows))


def orth_complement(space, weights):
    """Complement of `space` under the diagonal pairing sum_k w_k x_k y_k.

    weights may be Fractions; they are reduced mod p and must be invertible
    (this fails exactly at a representation's bad primes).
    """
    p = space.p
    wmod = []
    for w in weights:
        w = Fraction(w)
        if w.denominator % p == 0 or w.numerator % p == 0:
            raise ValueError(f"pairing weight {w} not invertible mod {p} (bad prime)")
        wmod.append((w.numerator * pow(w.denominator, p - 2, p)) % p)
    if len(wmod) != space.n:
        raise ValueError("weight vector length mismatch")
    rows = [[(b[k] * wmod[k]) % p for k in range(space.n)] for b in space.basis]
    basis = nullspace_fp(rows, p, ncols=space.n)
    return FpSubspace(p, space.n, tuple(tuple(v) for v in basis))
