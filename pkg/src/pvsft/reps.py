"""The five representations: descriptors, group actions, invariants, orbit
classifiers and representatives.

Coordinates follow the coefficient order of the orbit tables:
  sym3-2   a u^3 + b u^2 v + c u v^2 + d v^3                    -> (a,b,c,d)
  sym2-2   a u^2 + b uv + c v^2                                 -> (a,b,c)
  sym2-3   a u^2 + b uv + c uw + d v^2 + e vw + f w^2           -> (a,..,f)
  2sym2-2  pair of sym2-2, A-coordinates then B-coordinates     -> 6-tuple
  2sym2-3  pair of sym2-3, A-coordinates then B-coordinates     -> 12-tuple

classify() routes every vector through the same vectorized classifier used by
the census kernel, so there is exactly one classification code path.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .ffield import PrimeField, find_irreducible_monic, projective_points, smallest_nonresidue
from .qpoly import ONE, Q, QPoly


class BadPrimeError(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


def _s(a, b, c, d):
    # orbit-size shorthand (q-1)^a q^b (q+1)^c (q^2+q+1)^{d/2}, d even
    assert d % 2 == 0
    return (Q - 1) ** a * Q ** b * (Q + 1) ** c * QPoly((1, 1, 1)) ** (d // 2)


SYM32_LABELS = ("(0)", "(1^3)", "(1^2 1)", "(111)", "(21)", "(3)")
SYM22_LABELS = ("(0)", "(1^2)", "(11)", "(2)")
SYM23_LABELS = ("(0)", "(1^2)", "(11)", "(2)", "ns")
PAIR22_LABELS = ("(0)", "D1^2", "D11", "D2", "Cs", "Ts", "Ti")
PAIR23_LABELS = ("(0)", "D1^2", "D11", "D2", "Dns", "Cs", "Cns", "Ts", "Ti",
                 "1^4", "1^3 1", "1^2 1^2", "2^2", "1^2 11", "1^2 2",
                 "1111", "112", "22", "13", "4")


@dataclass(frozen=True)
class RepDescriptor:
    name: str
    dim: int
    nvars: int            # variables per form (2 or 3)
    nforms: int           # 1 for single forms, 2 for pairs
    group: str            # 'gl2', 'gl1xgl2', 'gl1xgl3', 'gl2xgl2', 'gl2xgl3'
    bad_primes: frozenset
    labels: tuple
    sizes: tuple          # QPoly per orbit, paper order
    zeros: tuple          # QPoly of projective zero counts (None where untabulated)
    weights: tuple        # diagonal pairing weights, Fractions
    cong_modulus: int     # 3 for sym3-2, 1 otherwise

    @property
    def r(self):
        return len(self.labels)

    def check_prime(self, p):
        if p in self.bad_primes:
            raise BadPrimeError(f"p={p} is a bad prime for {self.name}")

    def label_index(self, label):
        return self.labels.index(label)


def _nz(*polys):
    return tuple(polys)


REPS = {
    "sym3-2": RepDescriptor(
        name="sym3-2", dim=4, nvars=2, nforms=1, group="gl2",
        bad_primes=frozenset({3}),
        labels=SYM32_LABELS,
        sizes=(ONE, Q**2 - 1, Q**3 - Q,
               (Q**2 - 1) * (Q**2 - Q) / 6,
               (Q**2 - 1) * (Q**2 - Q) / 2,
               (Q**2 - 1) * (Q**2 - Q) / 3),
        zeros=_nz(Q + 1, ONE, QPoly.const(2), QPoly.const(3), ONE, QPoly()),
        weights=(Fraction(1), Fraction(1, 3), Fraction(1, 3), Fraction(1)),
        cong_modulus=3,
    ),
    "sym2-2": RepDescriptor(
        name="sym2-2", dim=3, nvars=2, nforms=1, group="gl1xgl2",
        bad_primes=frozenset({2}),
        labels=SYM22_LABELS,
        sizes=(ONE, Q**2 - 1, Q * (Q**2 - 1) / 2, Q * (Q - 1) ** 2 / 2),
        zeros=_nz(Q + 1, ONE, QPoly.const(2), QPoly()),
        weights=(Fraction(1), Fraction(1, 2), Fraction(1)),
        cong_modulus=1,
    ),
    "sym2-3": RepDescriptor(
        name="sym2-3", dim=6, nvars=3, nforms=1, group="gl1xgl3",
        bad_primes=frozenset({2}),
        labels=SYM23_LABELS,
        sizes=(ONE, Q**3 - 1, Q * (Q**3 - 1) * (Q + 1) / 2,
               Q * (Q**3 - 1) * (Q - 1) / 2, (Q**5 - Q**2) * (Q - 1)),
        zeros=_nz(QPoly((1, 1, 1)), Q + 1, 2 * Q + 1, ONE, Q + 1),
        weights=(Fraction(1), Fraction(1, 2), Fraction(1, 2),
                 Fraction(1), Fraction(1, 2), Fraction(1)),
        cong_modulus=1,
    ),
    "2sym2-2": RepDescriptor(
        name="2sym2-2", dim=6, nvars=2, nforms=2, group="gl2xgl2",
        bad_primes=frozenset({2}),
        labels=PAIR22_LABELS,
        sizes=(ONE, (Q - 1) * (Q + 1) ** 2, Q * (Q - 1) * (Q + 1) ** 2 / 2,
               Q * (Q - 1) ** 2 * (Q + 1) / 2, Q * (Q**2 - 1) ** 2,
               (Q**3 - Q) ** 2 / 2, (Q**2 - Q) ** 2 * (Q**2 - 1) / 2),
        zeros=(None,) * 7,
        weights=(Fraction(1), Fraction(1, 2), Fraction(1)) * 2,
        cong_modulus=1,
    ),
    "2sym2-3": RepDescriptor(
        name="2sym2-3", dim=12, nvars=3, nforms=2, group="gl2xgl3",
        bad_primes=frozenset({2}),
        labels=PAIR23_LABELS,
        sizes=(ONE, _s(1, 0, 1, 2), _s(1, 1, 2, 2) / 2, _s(2, 1, 1, 2) / 2,
               _s(2, 2, 1, 2), _s(2, 1, 2, 2), _s(2, 3, 1, 2),
               _s(2, 2, 2, 2) / 2, _s(3, 2, 1, 2) / 2,
               _s(3, 2, 2, 2), _s(3, 3, 2, 2), _s(2, 4, 2, 2) / 2,
               _s(3, 4, 1, 2) / 2, _s(3, 4, 2, 2) / 2, _s(3, 4, 2, 2) / 2,
               _s(4, 4, 2, 2) / 24, _s(4, 4, 2, 2) / 4, _s(4, 4, 2, 2) / 8,
               _s(4, 4, 2, 2) / 3, _s(4, 4, 2, 2) / 4),
        zeros=_nz(QPoly((1, 1, 1)), Q + 1, 2 * Q + 1, ONE, Q + 1, Q + 1, Q + 2,
                  ONE, ONE, ONE, QPoly.const(2), QPoly.const(2), QPoly(),
                  QPoly.const(3), ONE, QPoly.const(4), QPoly.const(2), QPoly(),
                  ONE, QPoly()),
        weights=(Fraction(1), Fraction(1, 2), Fraction(1, 2),
                 Fraction(1), Fraction(1, 2), Fraction(1)) * 2,
        cong_modulus=1,
    ),
}

REP_NAMES = tuple(REPS)


def get_rep(name):
    try:
        return REPS[name]
    except KeyError:
        raise ValueError(f"unknown representation {name!r}; expected one of {REP_NAMES}")


def pairing_weights(rep):
    """Diagonal weights of the invariant bilinear form (pairs repeat the
    single-form weights on each component)."""
    return rep.weights


def orbit_size(rep, label, q):
    """Orbit cardinality at q, evaluated from the size polynomial."""
    return rep.sizes[rep.label_index(label)].eval_int(q)


def validate_descriptor(rep):
    total = QPoly()
    for s in rep.sizes:
        total = total + s
    assert total == Q ** rep.dim, f"{rep.name}: orbit sizes do not sum to q^dim"
    assert len(rep.labels) == len(rep.sizes) == len(rep.zeros)


# ---------------------------------------------------------------------------
# vectors, indices, bilinear form
# ---------------------------------------------------------------------------

def vector_from_index(rep, idx, p):
    """Mixed-radix decode: digit k of idx (base p) is coordinate k."""
    coords = []
    for _ in range(rep.dim):
        coords.append(idx % p)
        idx //= p
    return tuple(coords)


def index_of_vector(rep, x, p):
    idx = 0
    for c in reversed(x):
        idx = idx * p + (c % p)
    return idx


def bilinear(rep, x, y, field):
    """[x, y] = sum_k w_k x_k y_k mod p."""
    p = field.p
    acc = 0
    for w, a, b in zip(rep.weights, x, y):
        if w.denominator % p == 0:
            raise BadPrimeError(f"pairing weight {w} not invertible mod {p}")
        wv = (w.numerator * pow(w.denominator, p - 2, p)) % p
        acc = (acc + wv * a * b) % p
    return acc


def weight_vector_mod(rep, p):
    out = []
    for w in rep.weights:
        if w.denominator % p == 0:
            raise BadPrimeError(f"pairing weight {w} not invertible mod {p}")
        out.append((w.numerator * pow(w.denominator, p - 2, p)) % p)
    return out


# ---------------------------------------------------------------------------
# group elements and the action
# ---------------------------------------------------------------------------

def _det2(m, p):
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p

def _det3(m, p):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) % p

def _mat_det(m, p):
    return _det2(m, p) if len(m) == 2 else _det3(m, p)

def _mat_mul_mod(a, b, p):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m))
                 for i in range(n))

def _mat_transpose(m):
    return tuple(tuple(row[i] for row in m) for i in range(len(m[0])))

def _mat_inv_mod(m, p):
    d = _mat_det(m, p)
    if d == 0:
        raise ValueError("matrix not invertible mod p")
    dinv = pow(d, p - 2, p)
    if len(m) == 2:
        return ((m[1][1] * dinv % p, -m[0][1] * dinv % p),
                (-m[1][0] * dinv % p, m[0][0] * dinv % p))
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [[m[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            cof[i][j] = ((-1) ** (i + j)) * (sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0])
    # adjugate = transpose of cofactor matrix
    return tuple(tuple(cof[j][i] * dinv % p for j in range(3)) for i in range(3))


def group_identity(rep):
    if rep.group == "gl2":
        return (((1, 0), (0, 1)),)
    if rep.group in ("gl1xgl2", "gl1xgl3"):
        n = 2 if rep.group.endswith("gl2") else 3
        return (1, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    n = 2 if rep.group == "gl2xgl2" else 3
    return (((1, 0), (0, 1)),
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def random_group_element(rep, p, rng):
    """Uniform-ish random element of G(F_p) by rejection on the determinant."""
    def rand_gl(n):
        while True:
            m = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
            if _mat_det(m, p) != 0:
                return m
    if rep.group == "gl2":
        return (rand_gl(2),)
    if rep.group == "gl1xgl2":
        return (rng.randrange(1, p), rand_gl(2))
    if rep.group == "gl1xgl3":
        return (rng.randrange(1, p), rand_gl(3))
    if rep.group == "gl2xgl2":
        return (rand_gl(2), rand_gl(2))
    return (rand_gl(2), rand_gl(3))


def inverse_transpose(rep, g, p):
    """Factor-wise g^{-T}; GL1 factors invert."""
    out = []
    for f in g:
        if isinstance(f, int):
            out.append(pow(f, p - 2, p))
        else:
            out.append(_mat_transpose(_mat_inv_mod(f, p)))
    return tuple(out)


def _sym_to_matrix(coords, nvars, p):
    """Doubled Gram matrix (2*A) of a quadratic form; avoids halves mod p."""
    if nvars == 2:
        a, b, c = coords
        return ((2 * a % p, b % p), (b % p, 2 * c % p))
    a, b, c, d, e, f = coords
    return ((2 * a % p, b % p, c % p),
            (b % p, 2 * d % p, e % p),
            (c % p, e % p, 2 * f % p))


def _matrix_to_sym(m, nvars, p):
    inv2 = pow(2, p - 2, p)
    if nvars == 2:
        return (m[0][0] * inv2 % p, m[0][1] % p, m[1][1] * inv2 % p)
    return (m[0][0] * inv2 % p, m[0][1] % p, m[0][2] % p,
            m[1][1] * inv2 % p, m[1][2] % p, m[2][2] * inv2 % p)


def _transform_quadratic(coords, g, nvars, p):
    s = _sym_to_matrix(coords, nvars, p)
    s2 = _mat_mul_mod(_mat_mul_mod(g, s, p), _mat_transpose(g), p)
    return _matrix_to_sym(s2, nvars, p)


def _bin_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def act(rep, g, x, p):
    """Transformed coefficient vector of g acting on x over F_p."""
    rep.check_prime(p)
    if rep.group == "gl2":
        (m,) = g
        det = _det2(m, p)
        if det == 0:
            raise ValueError("non-invertible group element")
        # substitute (u,v) -> (u,v)m into the cubic, then divide by det
        l1 = [m[0][0] % p, m[1][0] % p]      # new first argument, as (u,v) coeffs
        l2 = [m[0][1] % p, m[1][1] % p]
        a, b, c, d = x
        t1 = _bin_mul(_bin_mul(l1, l1, p), l1, p)
        t2 = _bin_mul(_bin_mul(l1, l1, p), l2, p)
        t3 = _bin_mul(_bin_mul(l1, l2, p), l2, p)
        t4 = _bin_mul(_bin_mul(l2, l2, p), l2, p)
        dinv = pow(det, p - 2, p)
        return tuple((a * t1[k] + b * t2[k] + c * t3[k] + d * t4[k]) * dinv % p
                     for k in range(4))
    if rep.group in ("gl1xgl2", "gl1xgl3"):
        s, m = g
        if s % p == 0 or _mat_det(m, p) == 0:
            raise ValueError("non-invertible group element")
        y = _transform_quadratic(x, m, rep.nvars, p)
        return tuple(s * c % p for c in y)
    g1, g2 = g
    if _det2(g1, p) == 0 or _mat_det(g2, p) == 0:
        raise ValueError("non-invertible group element")
    half = rep.dim // 2
    a_new = _transform_quadratic(x[:half], g2, rep.nvars, p)
    b_new = _transform_quadratic(x[half:], g2, rep.nvars, p)
    (al, be), (ga, de) = g1
    top = tuple((al * u + be * v) % p for u, v in zip(a_new, b_new))
    bot = tuple((ga * u + de * v) % p for u, v in zip(a_new, b_new))
    return top + bot


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def disc(rep, x, field):
    """Discriminant of a single-form vector (sym3-2, sym2-2, sym2-3)."""
    p = field.p
    if rep.name == "sym3-2":
        a, b, c, d = x
        return (b * b * c * c + 18 * a * b * c * d - 4 * a * c**3
                - 4 * b**3 * d - 27 * a * a * d * d) % p
    if rep.name == "sym2-2":
        a, b, c = x
        return (b * b - 4 * a * c) % p
    if rep.name == "sym2-3":
        rep.check_prime(p)
        s = _sym_to_matrix(x, 3, p)
        # disc = -4 det(A) = -det(2A)/2
        return (-_det3(s, p) * pow(2, p - 2, p)) % p
    raise ValueError(f"disc is not defined for {rep.name}")


def resolvent(rep, x, field):
    """Quadratic (2sym2-2) or cubic (2sym2-3) resolvent r_x = -4 det(Au+Bv)."""
    p = field.p
    half = rep.dim // 2
    xa, xb = x[:half], x[half:]
    if rep.name == "2sym2-2":
        a, b, c = xa
        d, e, f = xb
        return ((b * b - 4 * a * c) % p,
                (2 * b * e - 4 * (a * f + c * d)) % p,
                (e * e - 4 * d * f) % p)
    if rep.name == "2sym2-3":
        rep.check_prime(p)
        sa = _sym_to_matrix(xa, 3, p)
        sb = _sym_to_matrix(xb, 3, p)
        ca = [tuple(sa[i][j] for i in range(3)) for j in range(3)]
        cb = [tuple(sb[i][j] for i in range(3)) for j in range(3)]

        def det_cols(c1, c2, c3):
            return (c1[0] * (c2[1] * c3[2] - c2[2] * c3[1])
                    - c2[0] * (c1[1] * c3[2] - c1[2] * c3[1])
                    + c3[0] * (c1[1] * c2[2] - c1[2] * c2[1])) % p

        c0 = det_cols(ca[0], ca[1], ca[2])
        c1_ = (det_cols(ca[0], ca[1], cb[2]) + det_cols(ca[0], cb[1], ca[2])
               + det_cols(cb[0], ca[1], ca[2])) % p
        c2_ = (det_cols(ca[0], cb[1], cb[2]) + det_cols(cb[0], ca[1], cb[2])
               + det_cols(cb[0], cb[1], ca[2])) % p
        c3 = det_cols(cb[0], cb[1], cb[2])
        # det(2A u + 2B v) = 8 det(Au+Bv), so r = -4 det(Au+Bv) = -det(2Au+2Bv)/2
        m = (-pow(2, p - 2, p)) % p
        return tuple(m * c % p for c in (c0, c1_, c2_, c3))
    raise ValueError(f"resolvent is not defined for {rep.name}")


def _form_value(coords, point, nvars, p):
    if nvars == 2:
        u, v = point
        if len(coords) == 3:
            a, b, c = coords
            return (a * u * u + b * u * v + c * v * v) % p
        a, b, c, d = coords
        return (a * u**3 + b * u * u * v + c * u * v * v + d * v**3) % p
    u, v, w = point
    a, b, c, d, e, f = coords
    return (a * u * u + b * u * v + c * u * w + d * v * v + e * v * w + f * w * w) % p


def count_projective_zeros(rep, x, field):
    """Zeros of x (common zeros of the pair) in P^1 or P^2, by enumeration."""
    pts = projective_points(rep.nvars, field)
    if rep.nforms == 1:
        return sum(1 for pt in pts if _form_value(x, pt, rep.nvars, field.p) == 0)
    half = rep.dim // 2
    xa, xb = x[:half], x[half:]
    return sum(1 for pt in pts
               if _form_value(xa, pt, rep.nvars, field.p) == 0
               and _form_value(xb, pt, rep.nvars, field.p) == 0)


def count_p1_roots(x, field):
    """Number of roots of a binary cubic in P^1(F_p), without multiplicity."""
    return count_projective_zeros(REPS["sym3-2"], x, field)


def _rank_le1_sym3(s, p):
    s11, s12, s13, s22, s23, s33 = s
    return ((s11 * s22 - s12 * s12) % p == 0 and (s11 * s33 - s13 * s13) % p == 0
            and (s22 * s33 - s23 * s23) % p == 0 and (s11 * s23 - s12 * s13) % p == 0
            and (s12 * s23 - s13 * s22) % p == 0 and (s12 * s33 - s13 * s23) % p == 0)


def pencil_rank_le1_count(x, field):
    """#{[lam:mu] in P^1 : rank(lam*A + mu*B) <= 1} for a 2sym2-3 vector."""
    p = field.p
    sa = _sym_to_matrix(x[:6], 3, p)
    sb = _sym_to_matrix(x[6:], 3, p)
    count = 0
    for lam, mu in projective_points(2, field):
        s = tuple((lam * sa[i][j] + mu * sb[i][j]) % p
                  for i, j in ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)))
        if _rank_le1_sym3(s, p):
            count += 1
    return count


# ---------------------------------------------------------------------------
# orbit representatives
# ---------------------------------------------------------------------------

def orbit_representative(rep, label, field):
    """The orbit table's representative, with l and the irreducible
    polynomials determinized."""
    rep.check_prime(field.p)
    p = field.p
    if label not in rep.labels:
        raise ValueError(f"unknown orbit label {label!r} for {rep.name}")
    l = smallest_nonresidue(field)
    if rep.name == "sym3-2":
        if label == "(21)":
            b2, a2, _ = find_irreducible_monic(2, field).coeffs
            return (0, 1, a2, b2)
        if label == "(3)":
            c3, b3, a3, _ = find_irreducible_monic(3, field).coeffs
            return (1, a3, b3, c3)
        return {"(0)": (0, 0, 0, 0), "(1^3)": (0, 0, 0, 1),
                "(1^2 1)": (0, 0, 1, 0), "(111)": (0, 1, (-1) % p, 0)}[label]
    if rep.name == "sym2-2":
        return {"(0)": (0, 0, 0), "(1^2)": (0, 0, 1), "(11)": (0, 1, 0),
                "(2)": (1, 0, (-l) % p)}[label]
    if rep.name == "sym2-3":
        return {"(0)": (0,) * 6, "(1^2)": (1, 0, 0, 0, 0, 0),
                "(11)": (0, 1, 0, 0, 0, 0), "(2)": (1, 0, 0, (-l) % p, 0, 0),
                "ns": (1, 0, 0, 0, (-1) % p, 0)}[label]
    if rep.name == "2sym2-2":
        z = (0, 0, 0)
        table = {
            "(0)": z + z,
            "D1^2": z + (0, 0, 1),
            "D11": z + (0, 1, 0),
            "D2": z + (1, 0, (-l) % p),
            "Cs": (0, 0, 1) + (0, 1, 0),
            "Ts": (0, 0, 1) + (1, 0, 0),
            "Ti": (0, 1, 0) + (1, 0, l),
        }
        return table[label]
    # 2sym2-3; coordinates (a,b,c,d,e,f) of u^2,uv,uw,v^2,vw,w^2
    z = (0,) * 6
    w2 = (0, 0, 0, 0, 0, 1)
    vw = (0, 0, 0, 0, 1, 0)
    uw = (0, 0, 1, 0, 0, 0)
    table = {
        "(0)": z + z,
        "D1^2": z + w2,
        "D11": z + vw,
        "D2": z + (0, 0, 0, 1, 0, (-l) % p),
        "Dns": z + (1, 0, 0, 0, (-1) % p, 0),
        "Cs": w2 + vw,
        "Cns": vw + uw,
        "Ts": w2 + (0, 0, 0, 1, 0, 0),
        "Ti": vw + (0, 0, 0, 1, 0, l),
        "1^4": w2 + (0, 0, 1, 1, 0, 0),
        "1^3 1": vw + (0, 0, 1, 1, 0, 0),
        "1^2 1^2": w2 + (1, 0, 0, (-1) % p, 0, 0),
        "2^2": w2 + (1, 0, 0, (-l) % p, 0, 0),
        "1^2 11": (0, 0, 0, 1, 0, (-1) % p) + uw,
        "1^2 2": (0, 0, 0, 1, 0, (-l) % p) + uw,
        "1111": (0, 0, 1, 0, (-1) % p, 0) + (0, 1, 0, 0, (-1) % p, 0),
        "112": vw + (1, 0, 0, (-1) % p, 0, (-l) % p),
        "22": vw + (1, 0, 0, (-l) % p, 0, (-l) % p),
    }
    if label in table:
        return table[label]
    a_part = (0, 0, 1, (-1) % p, 0, 0)          # uw - v^2
    if label == "13":
        c3, b3, a3, _ = find_irreducible_monic(3, field).coeffs
        return a_part + (0, 1, 0, a3, b3, c3)   # uv + a3 v^2 + b3 vw + c3 w^2
    # label == "4"
    d4, c4, b4, a4, _ = find_irreducible_monic(4, field).coeffs
    return a_part + (1, a4, 0, b4, c4, d4)      # u^2 + a4 uv + b4 v^2 + c4 vw + d4 w^2


def orbit_representatives(rep, field):
    return [orbit_representative(rep, lab, field) for lab in rep.labels]


# ---------------------------------------------------------------------------
# vectorized classification (shared by classify() and the census kernel)
# ---------------------------------------------------------------------------

class ClassifyTables:
    """Per-(rep, p) lookup tables used inside the enumeration hot loop."""

    def __init__(self, rep, p):
        rep.check_prime(p)
        field = PrimeField(p)
        self.p = p
        self.rep = rep
        leg = np.zeros(p, dtype=np.int8)
        for a in range(1, p):
            leg[a] = field.legendre(a)
        self.legendre = leg
        p1 = np.array(projective_points(2, field), dtype=np.int64)
        self.p1_points = p1
        u, v = p1[:, 0], p1[:, 1]
        self.mon_cubic = np.stack([u * u * u, u * u * v, u * v * v, v * v * v]) % p
        self.mon_quad2 = np.stack([u * u, u * v, v * v]) % p
        if rep.nvars == 3:
            p2 = np.array(projective_points(3, field), dtype=np.int64)
            self.p2_points = p2
            u, v, w = p2[:, 0], p2[:, 1], p2[:, 2]
            self.mon_quad3 = np.stack([u * u, u * v, u * w, v * v, v * w, w * w]) % p


@lru_cache(maxsize=None)
def classify_tables(rep_name, p):
    return ClassifyTables(REPS[rep_name], p)


def _matmod(a, b, p):
    # entries are < p and inner dimensions tiny, so float64 matmul is exact
    out = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    out %= p
    return out


def _matmod_iszero(a, b, p):
    # (a @ b) % p == 0 without materializing integer residues; the float
    # values are exact integers, so the in-place float mod is exact too
    c = a.astype(np.float64) @ b.astype(np.float64)
    np.mod(c, p, out=c)
    return c == 0


def _classify_sym22(coords, p, tb):
    a, b, c = coords[:, 0], coords[:, 1], coords[:, 2]
    d = (b * b - 4 * a * c) % p
    nonzero = (a != 0) | (b != 0) | (c != 0)
    lab = np.zeros(len(coords), dtype=np.uint8)
    lab[nonzero & (d == 0)] = 1
    square = tb.legendre[d] == 1
    lab[(d != 0) & square] = 2
    lab[(d != 0) & ~square] = 3
    return lab


def _classify_sym32(coords, p, tb):
    nroots = np.count_nonzero(_matmod_iszero(coords, tb.mon_cubic, p), axis=1)
    a, b, c, d = (coords[:, k] for k in range(4))
    bc = b * c % p
    ad = a * d % p
    dsc = (bc * bc + 18 * ad * bc - 4 * (a * c % p) * (c * c % p)
           - 4 * (b * b % p) * (b * d % p) - 27 * ad * ad) % p
    lab = np.full(len(coords), 255, dtype=np.uint8)
    zero = ~coords.any(axis=1)
    lab[zero] = 0
    lab[~zero & (nroots == 1) & (dsc == 0)] = 1
    lab[~zero & (nroots == 2)] = 2
    lab[~zero & (nroots == 3)] = 3
    lab[~zero & (nroots == 1) & (dsc != 0)] = 4
    lab[~zero & (nroots == 0)] = 5
    if (lab == 255).any():
        raise ClassificationError("unclassifiable binary cubic encountered")
    return lab


def _sym3_entries(coords, p):
    a, b, c, d, e, f = (coords[:, k] for k in range(6))
    return (2 * a % p, b, c, 2 * d % p, e, 2 * f % p)


def _sym3_minors(s, p):
    s11, s12, s13, s22, s23, s33 = s
    return ((s11 * s22 - s12 * s12) % p, (s11 * s33 - s13 * s13) % p,
            (s22 * s33 - s23 * s23) % p, (s11 * s23 - s12 * s13) % p,
            (s12 * s23 - s13 * s22) % p, (s12 * s33 - s13 * s23) % p)


def _classify_sym23(coords, p, tb):
    s = _sym3_entries(coords, p)
    s11, s12, s13, s22, s23, s33 = s
    m = _sym3_minors(s, p)
    det = (s11 * ((s22 * s33 - s23 * s23) % p) - s12 * ((s12 * s33 - s23 * s13) % p)
           + s13 * ((s12 * s23 - s22 * s13) % p)) % p
    zero = ~coords.any(axis=1)
    rank_le1 = np.ones(len(coords), dtype=bool)
    for mi in m:
        rank_le1 &= mi == 0
    lab = np.full(len(coords), 255, dtype=np.uint8)
    lab[zero] = 0
    lab[rank_le1 & ~zero] = 1
    lab[det != 0] = 4
    rank2 = ~rank_le1 & (det == 0)
    # a symmetric rank-2 matrix has an invertible principal 2x2 block; the
    # restriction there is split iff -minor is a nonzero square
    pick = np.where(m[0] != 0, m[0], np.where(m[1] != 0, m[1], m[2]))
    split = tb.legendre[(-pick) % p] == 1
    lab[rank2 & split] = 2
    lab[rank2 & ~split] = 3
    if (lab == 255).any():
        raise ClassificationError("unclassifiable ternary quadratic encountered")
    return lab


def _dependent_mask(xa, xb, p):
    n = xa.shape[1]
    dep = np.ones(len(xa), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            dep &= (xa[:, i] * xb[:, j] - xa[:, j] * xb[:, i]) % p == 0
    return dep


def _classify_2sym22(coords, p, tb):
    xa, xb = coords[:, :3], coords[:, 3:]
    dep = _dependent_mask(xa, xb, p)
    lab = np.full(len(coords), 255, dtype=np.uint8)
    if dep.any():
        gen = np.where(xa[dep].any(axis=1)[:, None], xa[dep], xb[dep])
        sub = _classify_sym22(gen, p, tb)
        lab[dep] = sub  # (0)->0, (1^2)->D1^2, (11)->D11, (2)->D2 share indices
    ind = ~dep
    if ind.any():
        a, b, c = xa[ind, 0], xa[ind, 1], xa[ind, 2]
        d, e, f = xb[ind, 0], xb[ind, 1], xb[ind, 2]
        r0 = (b * b - 4 * a * c) % p
        r1 = (2 * b * e - 4 * (a * f + c * d)) % p
        r2 = (e * e - 4 * d * f) % p
        dr = (r1 * r1 - 4 * r0 * r2) % p
        sub = np.where(dr == 0, 4, np.where(tb.legendre[dr] == 1, 5, 6))
        lab[ind] = sub.astype(np.uint8)
    if (lab == 255).any():
        raise ClassificationError("unclassifiable pair of binary quadratics")
    return lab


PAIR23_BY_RES_ZEROS = {
    (1, 1): 9,    # resolvent (1^3), 1 common zero  -> 1^4
    (1, 2): 10,   #                 2 common zeros  -> 1^3 1
    (2, 2): 11,   # resolvent (1^2 1): 2 -> 1^2 1^2
    (2, 0): 12,   #                    0 -> 2^2
    (2, 3): 13,   #                    3 -> 1^2 11
    (2, 1): 14,   #                    1 -> 1^2 2
    (3, 4): 15,   # resolvent (111):   4 -> 1111
    (3, 0): 17,   #                    0 -> 22
    (4, 2): 16,   # resolvent (21):    2 -> 112
    (4, 0): 19,   #                    0 -> 4
}


def _pencil_rank_le1_batch(xa, xb, p, tb):
    sa = _sym3_entries(xa, p)
    sb = _sym3_entries(xb, p)
    count = np.zeros(len(xa), dtype=np.int64)
    for lam, mu in tb.p1_points:
        s = tuple((int(lam) * u + int(mu) * v) % p for u, v in zip(sa, sb))
        ok = np.ones(len(xa), dtype=bool)
        for mi in _sym3_minors(s, p):
            ok &= mi == 0
        count += ok
    return count


def _classify_2sym23(coords, p, tb):
    xa, xb = coords[:, :6], coords[:, 6:]
    dep = _dependent_mask(xa, xb, p)
    lab = np.full(len(coords), 255, dtype=np.uint8)
    if dep.any():
        gen = np.where(xa[dep].any(axis=1)[:, None], xa[dep], xb[dep])
        lab[dep] = _classify_sym23(gen, p, tb)  # (0),D1^2,D11,D2,Dns share indices
    ind = np.where(~dep)[0]
    if len(ind) == 0:
        return lab
    ya, yb = xa[ind], xb[ind]
    sa = _sym3_entries(ya, p)
    sb = _sym3_entries(yb, p)
    ca = ((sa[0], sa[1], sa[2]), (sa[1], sa[3], sa[4]), (sa[2], sa[4], sa[5]))
    cb = ((sb[0], sb[1], sb[2]), (sb[1], sb[3], sb[4]), (sb[2], sb[4], sb[5]))

    def det_cols(c1, c2, c3):
        return (c1[0] * ((c2[1] * c3[2] - c2[2] * c3[1]) % p)
                - c2[0] * ((c1[1] * c3[2] - c1[2] * c3[1]) % p)
                + c3[0] * ((c1[1] * c2[2] - c1[2] * c2[1]) % p)) % p

    c0 = det_cols(ca[0], ca[1], ca[2])
    c1_ = (det_cols(ca[0], ca[1], cb[2]) + det_cols(ca[0], cb[1], ca[2])
           + det_cols(cb[0], ca[1], ca[2])) % p
    c2_ = (det_cols(ca[0], cb[1], cb[2]) + det_cols(cb[0], ca[1], cb[2])
           + det_cols(cb[0], cb[1], ca[2])) % p
    c3 = det_cols(cb[0], cb[1], cb[2])
    minus_half = (-pow(2, p - 2, p)) % p
    res = np.stack([c0, c1_, c2_, c3], axis=1) * minus_half % p
    rtype = _classify_sym32(res, p, tb)

    za = _matmod_iszero(ya, tb.mon_quad3, p)
    za &= _matmod_iszero(yb, tb.mon_quad3, p)
    ncz = np.count_nonzero(za, axis=1)

    sub = np.full(len(ind), 255, dtype=np.uint8)
    r0 = rtype == 0
    sub[r0 & (ncz == p + 2)] = 6                      # Cns
    sub[r0 & (ncz == p + 1)] = 5                      # Cs
    need_pencil = r0 & (ncz == 1)
    if need_pencil.any():
        cnt = _pencil_rank_le1_batch(ya[need_pencil], yb[need_pencil], p, tb)
        w = np.where(need_pencil)[0]
        sub[w[cnt == 2]] = 7                          # Ts
        sub[w[cnt == 0]] = 8                          # Ti
    for (rt, nz), code in PAIR23_BY_RES_ZEROS.items():
        sub[(rtype == rt) & (ncz == nz)] = code
    sub[rtype == 5] = 18                              # resolvent (3) -> 13
    if (sub == 255).any():
        k = int(np.where(sub == 255)[0][0])
        raise ClassificationError(
            f"invariant tuple not recognized: resolvent type {int(rtype[k])}, "
            f"{int(ncz[k])} common zeros, x={tuple(int(v) for v in coords[ind[k]])}")
    lab[ind] = sub
    return lab


_CLASSIFIERS = {
    "sym3-2": _classify_sym32,
    "sym2-2": _classify_sym22,
    "sym2-3": _classify_sym23,
    "2sym2-2": _classify_2sym22,
    "2sym2-3": _classify_2sym23,
}


def classify_batch(rep, coords, p, tables=None):
    """Orbit indices (into rep.labels) for an (N, dim) int array of vectors."""
    rep.check_prime(p)
    if tables is None:
        tables = classify_tables(rep.name, p)
    coords = np.asarray(coords, dtype=np.int64) % p
    return _CLASSIFIERS[rep.name](coords, p, tables)


def classify(rep, x, field_or_p):
    """Orbit label of a single vector, via the batch classifier."""
    p = field_or_p.p if isinstance(field_or_p, PrimeField) else int(field_or_p)
    idx = classify_batch(rep, np.array([x], dtype=np.int64), p)[0]
    return rep.labels[idx]
