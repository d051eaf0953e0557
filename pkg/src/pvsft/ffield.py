"""Arithmetic in prime fields F_p (p odd), quadratic residues, irreducible
polynomial search and projective point enumeration.

Field elements are plain ints in [0, p); PrimeField carries the modulus and the
operations.  Everything here is deterministic so orbit representatives are
reproducible.
"""

from dataclasses import dataclass


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime p."""

    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")

    def normalize(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def legendre(self, a):
        """Quadratic residue symbol: 1 for nonzero squares, 0 for 0, -1 else."""
        a %= self.p
        if a == 0:
            return 0
        s = pow(a, (self.p - 1) // 2, self.p)
        return 1 if s == 1 else -1

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)


def inv(a, field):
    return field.inv(a)


def legendre(a, field):
    return field.legendre(a)


def smallest_nonresidue(field):
    """Smallest positive non-square mod p (determinizes the paper's arbitrary l)."""
    for a in range(2, field.p):
        if field.legendre(a) == -1:
            return a
    raise AssertionError("unreachable for odd p")


@dataclass(frozen=True)
class FpPolynomial:
    """Univariate polynomial over F_p, coefficients lowest degree first."""

    field: PrimeField
    coeffs: tuple

    def __post_init__(self):
        cs = [c % self.field.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.p
        return acc

    def has_root(self):
        return any(self(x) == 0 for x in self.field.elements())

    def divisible_by(self, other):
        """True when other divides self in F_p[X]."""
        p = self.field.p
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = self.field.inv(other.coeffs[-1])
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = (rem[-1] * lead_inv) % p
            k = len(rem) - 1 - d
            for i, c in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - f * c) % p
            rem.pop()
        return not any(rem)


def _monic_irreducible_quadratics(field):
    out = []
    for a1 in range(field.p):
        for a0 in range(field.p):
            f = FpPolynomial(field, (a0, a1, 1))
            if not f.has_root():
                out.append(f)
    return out


def find_irreducible_monic(d, field):
    """Deterministic monic irreducible of degree d in {2,3,4}.

    Scans coefficient tuples (a_{d-1},...,a_0) in increasing lexicographic
    order; irreducibility by root absence, plus (d=4) absence of irreducible
    quadratic factors.
    """
    if d not in (2, 3, 4):
        raise ValueError("degree must be 2, 3 or 4")
    quads = _monic_irreducible_quadratics(field) if d == 4 else ()

    def candidates():
        # mixed-radix count with a_0 moving fastest = lex order on (a_{d-1},..,a_0)
        for idx in range(field.p ** d):
            digits = []
            for _ in range(d):
                digits.append(idx % field.p)
                idx //= field.p
            # digits[0] = a_0 ... digits[d-1] = a_{d-1}
            yield FpPolynomial(field, tuple(digits) + (1,))

    for f in candidates():
        if f.has_root():
            continue
        if d == 4 and any(f.divisible_by(g) for g in quads):
            continue
        return f
    raise AssertionError("unreachable: irreducibles exist for every degree")


def projective_points(n, field):
    """Normalized representatives of P^{n-1}(F_p), n in {2,3}.

    Each point has first nonzero coordinate 1; order is by ascending
    mixed-radix index (digit k = coordinate k).
    """
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    p = field.p
    pts = []
    for idx in range(1, p ** n):
        digits = []
        t = idx
        for _ in range(n):
            digits.append(t % p)
            t //= p
        first = next(c for c in digits if c != 0)
        if first == 1:
            pts.append(tuple(digits))
    return pts
