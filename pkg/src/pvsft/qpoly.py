"""Exact univariate polynomials in q with rational coefficients.

Everything downstream (count tables, theorem matrices, interpolation) works with
these; no floating point anywhere.
"""

from fractions import Fraction


def _norm(coeffs):
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class QPoly:
    """Polynomial in q, lowest-degree coefficient first, Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _norm(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def const(c):
        return QPoly((c,))

    @staticmethod
    def monomial(k, c=1):
        return QPoly((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return QPoly([c / scalar for c in self.coeffs])

    def __pow__(self, n):
        out = QPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Evaluate at x (int or Fraction) exactly, by Horner."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, x):
        """Evaluate at integer x; the value must be an integer."""
        v = self(x)
        if v.denominator != 1:
            raise ValueError(f"non-integral value {v} of {self} at q={x}")
        return int(v)

    def divmod(self, other):
        """Exact polynomial division: self = other*quo + rem."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            quo[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return QPoly(quo), QPoly(rem)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"QPoly({self.pretty()!r})"

    def pretty(self, var="q"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if k == 0:
                body = str(c)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if c == 1 else f"{c}*{mono}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out


Q = QPoly((0, 1))   # the variable q
ONE = QPoly.const(1)
ZERO = QPoly()


def lagrange_interpolate(points):
    """Exact Lagrange interpolation through (x, y) pairs with distinct x."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    acc = QPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = QPoly.const(1)
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * QPoly((-xj, 1))
            den *= xi - xj
        acc = acc + num * (yi / den)
    return acc


def factor_small_roots(poly):
    """Write poly as c*(q-1)^a * q^b * (q+1)^c3 * (q^2+q+1)^d if possible.

    Returns (a, b, c3, d, constant) or None when the fully reduced part is not
    a constant.  Used for the paper-style [abc]*phi2 rendering.
    """
    if poly.is_zero():
        return None
    qm1 = QPoly((-1, 1))
    qp1 = QPoly((1, 1))
    phi2 = QPoly((1, 1, 1))
    exps = []
    for f in (qm1, Q, qp1, phi2):
        e = 0
        while True:
            quo, rem = poly.divmod(f)
            if rem.is_zero() and not quo.is_zero():
                poly, e = quo, e + 1
            else:
                break
        exps.append(e)
    if poly.degree != 0:
        return None
    return (*exps, poly.coeffs[0])
