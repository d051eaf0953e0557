"""Closed-form orbit/subspace count tables and the spanning families.

Count vectors |O_i ∩ W| are integer polynomials in q (per congruence class of
q mod 3 for binary cubics).  Base tables are transcriptions; the W_[i,j] grids
are rebuilt by the inclusion-exclusion recursions with the multiplier tables,
so every derived row is computed, not pasted.  The formula backend makes M(q)
available at arbitrary odd q; enumeration (census) cross-validates it at small
primes.
"""

from dataclasses import dataclass
from functools import lru_cache

from .qpoly import ONE, Q, QPoly, ZERO
from .reps import get_rep

# QPolynomial is the domain type these tables are made of
QPolynomial = QPoly

_QM1 = Q - 1
_QP1 = Q + 1
_PHI2 = QPoly((1, 1, 1))


def _vec(rep, entries):
    """Dense count vector from a {label: poly} mapping."""
    return tuple(QPoly.const(entries[lab]) if isinstance(entries.get(lab, ZERO), int)
                 else entries.get(lab, ZERO) for lab in rep.labels)


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vscale(a, c):
    return tuple(x * c for x in a)


def _exact_div(vec, divisor):
    out = []
    for x in vec:
        quo, rem = x.divmod(divisor)
        if not rem.is_zero():
            raise ValueError(f"non-exact division of {x} by {divisor} "
                             f"(count-table transcription error)")
        out.append(quo)
    return tuple(out)


@dataclass(frozen=True)
class FamilyMember:
    sid: str
    mask: tuple
    dual: str          # subspace id whose counts equal those of this member's perp

    @property
    def dim(self):
        return sum(self.mask)


@dataclass(frozen=True)
class SpanningFamily:
    rep: str
    members: tuple

    def __iter__(self):
        return iter(self.members)


def _last_mask(n, k):
    return tuple(0 if i < n - k else 1 for i in range(n))


def _pair_mask(i, j, n=6):
    return _last_mask(n, i) + _last_mask(n, j)


# ---------------------------------------------------------------------------
# subspace masks
# ---------------------------------------------------------------------------

_MASKS = {
    "sym3-2": {
        "W0": (0, 0, 0, 0), "W1": (0, 0, 0, 1), "W2": (0, 0, 1, 1),
        "W3": (0, 1, 1, 0), "W3P": (1, 0, 0, 1), "W1P": (1, 1, 1, 0),
        "W2P": (1, 1, 0, 0), "V": (1, 1, 1, 1),
    },
    "sym2-2": {
        "W0": (0, 0, 0), "W1": (0, 0, 1), "W2": (0, 1, 1),
        "W1P": (1, 1, 0), "W2P": (1, 0, 0), "Wb": (0, 1, 0),
        "Wac": (1, 0, 1), "V": (1, 1, 1),
    },
    "sym2-3": {
        "W0": (0,) * 6, "W1": (0, 0, 0, 0, 0, 1), "W2": (0, 0, 0, 1, 0, 1),
        "W3": (0, 0, 1, 1, 1, 1), "W1P": (1, 1, 1, 1, 1, 0),
        "W2P": (1, 1, 1, 0, 1, 0), "V": (1,) * 6,
    },
    "2sym2-2": {f"sbs{i}{j}": _pair_mask(i, j, 3)
                for i in range(4) for j in range(4) if i <= j},
    "2sym2-3": {f"sbs{i}{j}": _pair_mask(i, j, 6)
                for i in range(7) for j in range(7)
                if i <= j and (i <= 2 or (i, j) in ((3, 3), (4, 4), (5, 5), (6, 6)))},
}
_MASKS["2sym2-2"]["sbs03P"] = _pair_mask(3, 0, 3)
_MASKS["2sym2-3"].update({
    "W1": (0,) * 6 + (0, 0, 1, 0, 1, 1),
    "W2": (0, 0, 0, 0, 0, 1) + (0, 0, 1, 0, 1, 1),
    "W3": (0, 0, 1, 0, 1, 1) * 2,
    "W4": (0,) * 6 + (0, 0, 0, 1, 0, 1),
    "W5": (0, 0, 0, 1, 0, 1) * 2,
    "W6": (1, 1, 1, 0, 1, 0) * 2,
    "W7": (0, 0, 0, 1, 1, 1) + (1, 1, 1, 0, 0, 0),
})


def subspace_mask(rep_name, sid):
    return _MASKS[rep_name][sid]


def subspace_ids(rep_name):
    return tuple(_MASKS[rep_name])


# ---------------------------------------------------------------------------
# base tables (transcribed)
# ---------------------------------------------------------------------------

def _zero_ratio_vec(rep, power):
    """Counts of {x : a fixed point set of size `power` conditions}:
    size_i * z_i / (q^2+q+1) for one point, * (z_i-1)/(q^2+q) again for two."""
    ambient = _PHI2 if rep.nvars == 3 else _QP1
    vec = []
    for size, z in zip(rep.sizes, rep.zeros):
        entry = size * z
        quo, rem = entry.divmod(ambient)
        if not rem.is_zero():
            raise ValueError("zero-count formula does not divide exactly")
        if power == 2:
            entry = quo * (z - 1)
            quo, rem = entry.divmod(ambient - 1)
            if not rem.is_zero():
                raise ValueError("two-point formula does not divide exactly")
        vec.append(quo)
    return tuple(vec)


def base_counts(rep_name):
    """The transcribed base-case count vectors (everything not derived by a
    recursion or a zero-count formula)."""
    rep = get_rep(rep_name)
    q = Q
    if rep_name == "sym3-2":
        return {
            "W0": {None: _vec(rep, {"(0)": ONE})},
            "W1": {None: _vec(rep, {"(0)": ONE, "(1^3)": q - 1})},
            "W2": {None: _vec(rep, {"(0)": ONE, "(1^3)": q - 1, "(1^2 1)": q * (q - 1)})},
            "W3": {None: _vec(rep, {"(0)": ONE, "(1^2 1)": 2 * (q - 1),
                                    "(111)": (q - 1) ** 2})},
            "W3P": {
                1: _vec(rep, {"(0)": ONE, "(1^3)": 2 * (q - 1),
                              "(111)": (q - 1) ** 2 / 3, "(3)": 2 * (q - 1) ** 2 / 3}),
                2: _vec(rep, {"(0)": ONE, "(1^3)": 2 * (q - 1), "(21)": (q - 1) ** 2}),
            },
            "W2P": {None: _vec(rep, {"(0)": ONE, "(1^3)": q - 1,
                                     "(1^2 1)": q * (q - 1)})},
            "V": {None: rep.sizes},
        }
    if rep_name == "sym2-2":
        w1 = _vec(rep, {"(0)": ONE, "(1^2)": q - 1})
        w2 = _vec(rep, {"(0)": ONE, "(1^2)": q - 1, "(11)": q * (q - 1)})
        return {
            "W0": {None: _vec(rep, {"(0)": ONE})},
            "W1": {None: w1}, "W2": {None: w2},
            "W1P": {None: w2}, "W2P": {None: w1},
            "Wb": {None: _vec(rep, {"(0)": ONE, "(11)": q - 1})},
            "Wac": {None: _vec(rep, {"(0)": ONE, "(1^2)": 2 * (q - 1),
                                     "(11)": (q - 1) ** 2 / 2,
                                     "(2)": (q - 1) ** 2 / 2})},
            "V": {None: rep.sizes},
        }
    if rep_name == "sym2-3":
        return {
            "W0": {None: _vec(rep, {"(0)": ONE})},
            "W1": {None: _vec(rep, {"(0)": ONE, "(1^2)": q - 1})},
            "W2": {None: _vec(rep, {"(0)": ONE, "(1^2)": 2 * (q - 1),
                                    "(11)": (q - 1) ** 2 / 2, "(2)": (q - 1) ** 2 / 2})},
            "W3": {None: _vec(rep, {"(0)": ONE, "(1^2)": q * q - 1,
                                    "(11)": q * (3 * q * q - 2 * q - 1) / 2,
                                    "(2)": q * (q - 1) ** 2 / 2,
                                    "ns": q * q * (q - 1) ** 2})},
            "V": {None: rep.sizes},
        }
    if rep_name == "2sym2-2":
        return {
            "sbs00": {None: _vec(rep, {"(0)": ONE})},
            "sbs01": {None: _vec(rep, {"(0)": ONE, "D1^2": q - 1})},
            "sbs02": {None: _vec(rep, {"(0)": ONE, "D1^2": q - 1, "D11": q * (q - 1)})},
            "sbs03": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1,
                                       "D11": q * (q * q - 1) / 2,
                                       "D2": q * (q - 1) ** 2 / 2})},
            "sbs11": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1})},
            "sbs33": {None: rep.sizes},
        }
    # 2sym2-3: D-orbit columns carry the sym2-3 subspace tables
    return {
        "sbs00": {None: _vec(rep, {"(0)": ONE})},
        "sbs01": {None: _vec(rep, {"(0)": ONE, "D1^2": q - 1})},
        "sbs02": {None: _vec(rep, {"(0)": ONE, "D1^2": q - 1, "D11": q * (q - 1)})},
        "sbs03": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1,
                                   "D11": q * (q * q - 1) / 2,
                                   "D2": q * (q - 1) ** 2 / 2})},
        "sbs04": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1,
                                   "D11": q * (q - 1) * (3 * q + 1) / 2,
                                   "D2": q * (q - 1) ** 2 / 2,
                                   "Dns": q * q * (q - 1) ** 2})},
        "sbs05": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1,
                                   "D11": (2 * q + 1) * q * (q * q - 1) / 2,
                                   "D2": q * (q - 1) ** 2 / 2,
                                   "Dns": q * q * (q * q - 1) * (q - 1)})},
        "sbs06": {None: _vec(rep, {"(0)": ONE, "D1^2": q ** 3 - 1,
                                   "D11": q * (q + 1) * (q ** 3 - 1) / 2,
                                   "D2": q * (q - 1) * (q ** 3 - 1) / 2,
                                   "Dns": q * q * (q - 1) * (q ** 3 - 1)})},
        "sbs11": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1})},
        "sbs66": {None: rep.sizes},
        "W1": {None: _vec(rep, {"(0)": ONE, "D1^2": q - 1, "D11": q * (q * q - 1)})},
        "W2": {None: _vec(rep, {"(0)": ONE, "D1^2": q * q - 1, "D11": q * (q * q - 1),
                                "Cs": q * (q - 1) * (q * q - 1)})},
        "W4": {None: _vec(rep, {"(0)": ONE, "D1^2": 2 * (q - 1),
                                "D11": (q - 1) ** 2 / 2, "D2": (q - 1) ** 2 / 2})},
    }


# ---------------------------------------------------------------------------
# the W^x multiplier tables of sections 6 and 7.2(I)
# ---------------------------------------------------------------------------

_MULTIPLIERS_22 = {
    (1, 2): (Q * _QM1 ** 2, {"Cs": ONE}),
    (1, 3): (Q**2 * _QM1 ** 2, {"Ts": ONE}),
    (2, 2): ((Q**2 - 1) * (Q**2 - Q), {"Cs": ONE}),
    (2, 3): (Q**2 * _QM1 ** 2, {"Cs": ONE, "Ts": _QM1 / 2, "Ti": _QM1 / 2}),
    (3, 3): (Q * (Q**2 - 1) * (Q**2 - Q),
             {"Cs": ONE, "Ts": _QM1 / 2, "Ti": _QM1 / 2}),
}

_MULTIPLIERS_23 = {
    (1, 2): (Q * _QM1 ** 2, {"Cs": ONE}),
    (1, 3): (Q**2 * _QM1 ** 2, {"Ts": ONE}),
    (2, 2): (Q * _QM1 * (Q**2 - 1), {"Cs": ONE}),
    (2, 3): (Q**2 * _QM1 ** 2, {"Cs": ONE, "Ts": _QM1 / 2, "Ti": _QM1 / 2}),
    (3, 3): (Q**2 * _QM1 * (Q**2 - 1),
             {"Cs": ONE, "Ts": _QM1 / 2, "Ti": _QM1 / 2}),
    (1, 4): (Q**2 * _QM1 ** 2, {"Cs": ONE, "1^4": _QM1}),
    (1, 5): (Q**4 * _QM1 ** 2, {"1^2 1^2": ONE}),
    (1, 6): (Q**3 * _QM1 ** 2, {"Ts": ONE, "1^4": _QM1,
                                "1^2 1^2": Q * _QM1 / 2, "2^2": Q * _QM1 / 2}),
    (2, 4): (Q**3 * _QM1 ** 2, {"Cns": ONE, "1^3 1": _QM1}),
    (2, 5): (Q**3 * _QM1 ** 2, {"Cns": ONE, "1^3 1": _QM1, "1^2 11": Q * _QM1}),
    (2, 6): (Q**4 * _QM1 ** 2, {"1^2 1^2": ONE, "1^2 11": _QM1, "1^2 2": _QM1,
                                "1111": _QM1 ** 2 / 4, "112": _QM1 ** 2 / 2,
                                "22": _QM1 ** 2 / 4}),
    (4, 4): (Q**3 * (Q**2 - 1) * (Q**2 - Q),
             {"1^2 1^2": ONE, "1^2 11": _QM1 / 2, "1^2 2": _QM1 / 2}),
}


def derive_wij(rep_name, i, j):
    """W_[i,j] by inclusion-exclusion: the W^x contribution plus
    W_[i-1,j] + W_[i,j-1] - W_[i-1,j-1] (i<j), or the (q+1)-to-one recursion
    W_[i,i] = W^x + (q+1) W_[i-2,i] - q W_[i-2,i-2]."""
    rep = get_rep(rep_name)
    table = _MULTIPLIERS_22 if rep_name == "2sym2-2" else _MULTIPLIERS_23
    if (i, j) not in table:
        raise KeyError(f"no multiplier-table row for W[{i},{j}] of {rep_name}")
    mult, shape = table[(i, j)]
    cross = _vscale(_vec(rep, shape), mult)

    def cv(a, b):
        return count_polys(rep_name, f"sbs{min(a, b)}{max(a, b)}")[None]

    if i < j:
        out = _vadd(cross, cv(i - 1, j))
        out = _vadd(out, cv(i, j - 1))
        return {None: _vsub(out, cv(i - 1, j - 1))}
    out = _vadd(cross, _vscale(cv(i - 2, i), _QP1))
    return {None: _vsub(out, _vscale(cv(i - 2, i - 2), Q))}


def zero_formula_counts(rep_name, sid):
    """Counts through the common-zero formulas n_i |O_i| / (q^2+q+1) and
    n_i (n_i - 1) |O_i| / ((q^2+q+1)(q^2+q)) (and their P^1 analogues)."""
    rep = get_rep(rep_name)
    if rep_name in ("sym2-3", "2sym2-3") and sid in ("W1P", "sbs55"):
        return {None: _zero_ratio_vec(rep, 1)}
    if rep_name in ("sym2-3", "2sym2-3") and sid in ("W2P", "W6"):
        return {None: _zero_ratio_vec(rep, 2)}
    if rep_name == "sym3-2" and sid == "W1P":
        return {None: _zero_ratio_vec(rep, 1)}
    raise KeyError(f"no zero-count formula for {sid} of {rep_name}")


def special_counts(rep_name, sid):
    """The section-7.2 special subspaces W1..W5 (II) and W7 (IV)."""
    if rep_name != "2sym2-3":
        raise KeyError("special subspaces exist only for 2sym2-3")
    rep = get_rep(rep_name)
    q = Q
    if sid in ("W1", "W2", "W4"):
        return {None: base_counts(rep_name)[sid][None]}
    if sid == "W3":
        cross = _vscale(_vec(rep, {"Cns": ONE}), q**3 * _QM1 * (q * q - 1))
        out = _vadd(cross, _vscale(count_polys(rep_name, "W2")[None], _QP1))
        return {None: _vsub(out, _vscale(count_polys(rep_name, "sbs11")[None], q))}
    if sid == "W5":
        cross = _vscale(_vec(rep, {"Ts": ONE}), q * _QM1 * (q * q - 1))
        out = _vadd(cross, _vscale(count_polys(rep_name, "W4")[None], _QP1))
        return {None: _vsub(out, _vscale(count_polys(rep_name, "sbs00")[None], q))}
    if sid == "W7":
        part1 = _vscale(_vec(rep, {
            "D1^2": ONE, "Ts": q * q - 1, "1^2 1^2": q * (q * q - 1) / 2,
            "2^2": q * _QM1 ** 2 / 2}), _QM1)
        part2 = _vscale(_vec(rep, {
            "D11": ONE, "Ts": _QM1, "1^2 1^2": q * _QM1, "1^2 11": q * _QM1,
            "1111": q * _QM1 ** 2 / 2, "22": q * _QM1 ** 2 / 2}), _QM1 * (q * q - 1))
        part3 = _vec(rep, {"(0)": ONE, "D1^2": q * q - 1, "D11": q * (q * q - 1) / 2,
                           "D2": q * _QM1 ** 2 / 2})
        part4 = _vscale(_vec(rep, {"D11": ONE, "Cs": _QM1, "Cns": q * _QM1}),
                        q * q - 1)
        part5 = _vscale(_vec(rep, {"1^2 1^2": ONE, "1^2 11": _QM1 / 2,
                                   "1^2 2": _QM1 / 2}), (q * q - 1) * _QM1 * q)
        out = _vadd(_vadd(part1, part2), _vadd(part3, _vadd(part4, part5)))
        return {None: out}
    raise KeyError(f"no special-subspace formula for {sid}")


@lru_cache(maxsize=None)
def count_polys(rep_name, sid):
    """Count vector of |O_i ∩ W_sid| as polynomials, keyed by congruence class
    (None when class-free)."""
    base = base_counts(rep_name)
    if sid in base:
        return base[sid]
    if rep_name == "sym3-2" and sid == "W1P":
        return zero_formula_counts(rep_name, sid)
    if rep_name == "sym2-3" and sid in ("W1P", "W2P"):
        return zero_formula_counts(rep_name, sid)
    if rep_name == "2sym2-2":
        if sid == "sbs03P":
            return count_polys(rep_name, "sbs03")
        if sid.startswith("sbs"):
            return derive_wij(rep_name, int(sid[3]), int(sid[4]))
    if rep_name == "2sym2-3":
        if sid in ("sbs55", "W6"):
            return zero_formula_counts(rep_name, sid)
        if sid in ("W3", "W5", "W7"):
            return special_counts(rep_name, sid)
        if sid.startswith("sbs"):
            return derive_wij(rep_name, int(sid[3]), int(sid[4]))
    raise KeyError(f"unknown subspace id {sid!r} for {rep_name}")


def count_vector_at(rep_name, sid, q):
    """Integer count vector at q, choosing the congruence class by q mod 3."""
    rep = get_rep(rep_name)
    entry = count_polys(rep_name, sid)
    key = None if None in entry else q % rep.cong_modulus
    return [poly.eval_int(q) for poly in entry[key]]


# ---------------------------------------------------------------------------
# spanning families (solve order and dual structure follow the paper)
# ---------------------------------------------------------------------------

_FAMILIES = {
    "sym3-2": [("W0", "V"), ("W1", "W1P"), ("W2", "W2P"), ("W3", "W3P"),
               ("W1P", "W1"), ("V", "W0")],
    "sym2-2": [("W0", "V"), ("W1", "W1P"), ("W2", "W2P"), ("V", "W0")],
    "sym2-3": [("W0", "V"), ("W1", "W1P"), ("W2", "W2P"), ("W1P", "W1"),
               ("V", "W0")],
    "2sym2-2": [("sbs00", "sbs33"), ("sbs11", "sbs22"), ("sbs02", "sbs13"),
                ("sbs03", "sbs03P"), ("sbs13", "sbs02"), ("sbs22", "sbs11"),
                ("sbs33", "sbs00")],
    "2sym2-3": [("sbs00", "sbs66"), ("sbs66", "sbs00"), ("sbs11", "sbs55"),
                ("sbs55", "sbs11"), ("sbs04", "sbs26"), ("sbs26", "sbs04"),
                ("sbs05", "sbs16"), ("sbs16", "sbs05"), ("sbs14", "sbs25"),
                ("sbs25", "sbs14"), ("sbs22", "sbs44"), ("sbs44", "sbs22"),
                ("sbs33", "W3"), ("W3", "sbs33"), ("W5", "W6"), ("W6", "W5"),
                ("sbs06", "sbs06"), ("sbs15", "sbs15"), ("sbs24", "sbs24"),
                ("W7", "W7")],
}


def spanning_family(rep_name):
    """The subspaces whose count vectors determine M, with dual partners."""
    get_rep(rep_name)
    members = tuple(FamilyMember(sid, subspace_mask(rep_name, sid), dual)
                    for sid, dual in _FAMILIES[rep_name])
    return SpanningFamily(rep_name, members)


def verify_table_totals(rep_name):
    """Per-subspace totals must equal q^dim(W) as polynomial identities."""
    rep = get_rep(rep_name)
    for sid in subspace_ids(rep_name):
        dim = sum(subspace_mask(rep_name, sid))
        for cls, vec in count_polys(rep_name, sid).items():
            total = ZERO
            for x in vec:
                total = total + x
            if total != Q ** dim:
                raise AssertionError(
                    f"{rep_name} {sid} (class {cls}): counts sum to {total}, "
                    f"expected q^{dim}")


# count providers -----------------------------------------------------------

class FormulaProvider:
    """Closed-form counts; valid at any odd q that is good for the rep."""

    source = "table"

    def __init__(self, rep_name):
        self.rep_name = rep_name

    def count_vector(self, sid, q):
        return count_vector_at(self.rep_name, sid, q)


class EnumerationProvider:
    """Counts by exhaustive enumeration of each subspace at a fixed prime."""

    source = "subspace"

    def __init__(self, rep_name, p, threads=None, budget=None):
        self.rep_name = rep_name
        self.p = p
        self.threads = threads
        self.budget = budget
        self._cache = {}

    def count_vector(self, sid, q):
        if q != self.p:
            raise ValueError(f"enumeration provider is bound to p={self.p}")
        if sid not in self._cache:
            from .census import SubspaceSpec, count_in_subspace
            spec = SubspaceSpec(self.rep_name, mask=subspace_mask(self.rep_name, sid))
            self._cache[sid] = list(count_in_subspace(
                self.rep_name, self.p, spec, threads=self.threads,
                budget=self.budget).counts)
        return self._cache[sid]


def counts_to_csv(rep_name, q=None, sids=None):
    """CSV rows (subspace, orbit, polynomial, value-at-q?) for the tables."""
    rep = get_rep(rep_name)
    lines = ["subspace,orbit,class,polynomial" + (",value" if q is not None else "")]
    for sid in (sids or subspace_ids(rep_name)):
        for cls, vec in sorted(count_polys(rep_name, sid).items(),
                               key=lambda kv: (kv[0] is not None, kv[0])):
            for lab, poly in zip(rep.labels, vec):
                row = [sid, f'"{lab}"', "" if cls is None else str(cls),
                       f'"{poly.pretty()}"']
                if q is not None:
                    row.append(str(poly.eval_int(q)) if (cls is None or cls == q % 3)
                               else "")
                lines.append(",".join(row))
    return "\n".join(lines) + "\n"
