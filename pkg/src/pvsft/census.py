"""High-throughput exact enumeration: full-space censuses, subspace
intersection counts, character histograms and the brute-force Fourier oracle.

Work is a map-reduce over contiguous mixed-radix index ranges; chunks are
classified with the vectorized classifiers from reps and reduced by integer
addition, so results are independent of chunking and thread count.
"""

import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import reps as R
from .ffield import PrimeField

DEFAULT_BUDGET = 2_000_000_000
_CHUNK = 1 << 18


class BudgetExceededError(RuntimeError):
    def __init__(self, needed, budget):
        super().__init__(
            f"enumeration of {needed} elements exceeds the budget of {budget}; "
            f"raise it via --enum-budget or PVSFT_BUDGET")
        self.needed = needed
        self.budget = budget


def _budget():
    return int(os.environ.get("PVSFT_BUDGET", DEFAULT_BUDGET))


def _threads(threads):
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("PVSFT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class CountVector:
    rep: str
    counts: tuple

    def __iter__(self):
        return iter(self.counts)

    def total(self):
        return sum(self.counts)


@dataclass
class CharacterHistogram:
    """N[i][k] = #{x in O_i : [x, y] = k}."""

    rep: str
    y: tuple
    table: tuple  # r rows of length p

    def row(self, i):
        return self.table[i]

    def uniform_tail(self, i):
        """True when N[i][k] is constant over k != 0."""
        tail = self.table[i][1:]
        return all(v == tail[0] for v in tail)


@dataclass
class SubspaceSpec:
    """A subspace given by a coordinate mask or an explicit F_p basis."""

    rep: str
    mask: tuple = None
    basis: tuple = None

    def __post_init__(self):
        if (self.mask is None) == (self.basis is None):
            raise ValueError("exactly one of mask/basis must be given")
        if self.mask is not None and len(self.mask) != R.get_rep(self.rep).dim:
            raise ValueError("mask length must equal the representation dimension")

    @property
    def dim(self):
        return sum(self.mask) if self.mask is not None else len(self.basis)


def _decode_range(p, dim, start, stop):
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, dim), dtype=np.int64)
    for k in range(dim):
        out[:, k] = idx % p
        idx //= p
    return out


def _subspace_coords(spec, p, start, stop, dim):
    free = _decode_range(p, spec.dim, start, stop) if spec.dim else \
        np.zeros((stop - start, 0), dtype=np.int64)
    if spec.mask is not None:
        out = np.zeros((stop - start, dim), dtype=np.int64)
        cols = [k for k, keep in enumerate(spec.mask) if keep]
        for j, k in enumerate(cols):
            out[:, k] = free[:, j]
        return out
    basis = np.array(spec.basis, dtype=np.int64)
    return R._matmod(free, basis, p) if spec.dim else \
        np.zeros((stop - start, dim), dtype=np.int64)


class _Progress:
    def __init__(self, label, total, interval=None):
        if interval is None:
            interval = float(os.environ.get("PVSFT_PROGRESS", "0") or 0)
        self.label = label
        self.total = total
        self.interval = interval
        self.done = 0
        self.t0 = time.time()
        self.last = self.t0

    def advance(self, n):
        if not self.interval:
            return
        self.done += n
        now = time.time()
        if now - self.last >= self.interval:
            self.last = now
            pct = 100.0 * self.done / self.total
            rate = self.done / max(now - self.t0, 1e-9)
            print(f"[pvsft] {self.label}: {self.done}/{self.total} "
                  f"({pct:.1f}%, {rate:,.0f}/s)", file=sys.stderr)


def _map_reduce(total, work, threads, progress):
    """Sum work(start, stop) over contiguous chunks, optionally in parallel."""
    chunks = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    nthreads = _threads(threads)
    acc = None

    def run(chunk):
        out = work(*chunk)
        progress.advance(chunk[1] - chunk[0])
        return out

    if nthreads == 1 or len(chunks) == 1:
        for ch in chunks:
            out = run(ch)
            acc = out if acc is None else acc + out
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            for out in pool.map(run, chunks):
                acc = out if acc is None else acc + out
    return acc


def full_census(rep, field_or_p, threads=None, budget=None, progress_interval=None):
    """Counts |O_i| by classifying every vector of V(F_p)."""
    rep, p = _rep_p(rep, field_or_p)
    total = p ** rep.dim
    _check_budget(total, budget)
    tb = R.classify_tables(rep.name, p)

    def work(start, stop):
        labels = R.classify_batch(rep, _decode_range(p, rep.dim, start, stop), p, tb)
        return np.bincount(labels, minlength=rep.r)

    prog = _Progress(f"census {rep.name} p={p}", total, progress_interval)
    counts = _map_reduce(total, work, threads, prog)
    return CountVector(rep.name, tuple(int(c) for c in counts))


def count_in_subspace(rep, field_or_p, spec, threads=None, budget=None,
                      progress_interval=None):
    """Counts |O_i ∩ W| by enumerating the p^dim(W) elements of W."""
    rep, p = _rep_p(rep, field_or_p)
    total = p ** spec.dim
    _check_budget(total, budget)
    tb = R.classify_tables(rep.name, p)

    def work(start, stop):
        coords = _subspace_coords(spec, p, start, stop, rep.dim)
        labels = R.classify_batch(rep, coords, p, tb)
        return np.bincount(labels, minlength=rep.r)

    prog = _Progress(f"subspace count {rep.name} p={p}", total, progress_interval)
    counts = _map_reduce(total, work, threads, prog)
    return CountVector(rep.name, tuple(int(c) for c in counts))


def _pairing_matrix(rep, p, ys):
    """Column k is the weighted representative w ⊙ y_k, so coords @ M = [x,y_k]."""
    w = R.weight_vector_mod(rep, p)
    cols = np.array([[wk * yk % p for wk, yk in zip(w, y)] for y in ys],
                    dtype=np.int64).T
    return cols % p


def _histogram_pass(rep, p, ys, threads, budget, progress_interval):
    """One full-space pass: for every y in ys, the (r x p) residue histogram."""
    total = p ** rep.dim
    _check_budget(total, budget)
    tb = R.classify_tables(rep.name, p)
    wy = _pairing_matrix(rep, p, ys)
    nys = len(ys)

    def work(start, stop):
        coords = _decode_range(p, rep.dim, start, stop)
        labels = R.classify_batch(rep, coords, p, tb).astype(np.int64)
        resid = R._matmod(coords, wy, p)
        out = np.empty((nys, rep.r * p), dtype=np.int64)
        for k in range(nys):
            out[k] = np.bincount(labels * p + resid[:, k], minlength=rep.r * p)
        return out

    prog = _Progress(f"character sums {rep.name} p={p}", total, progress_interval)
    acc = _map_reduce(total, work, threads, prog)
    return acc.reshape(nys, rep.r, p)


def character_histogram(rep, field_or_p, y, threads=None, budget=None,
                        progress_interval=None):
    """Histogram of residues [x, y] per orbit, over all x in V."""
    rep, p = _rep_p(rep, field_or_p)
    table = _histogram_pass(rep, p, [tuple(y)], threads, budget, progress_interval)[0]
    return CharacterHistogram(rep.name, tuple(y),
                              tuple(tuple(int(v) for v in row) for row in table))


def oracle_ft_matrix(rep, field_or_p, threads=None, budget=None,
                     progress_interval=None):
    """The Fourier matrix by definition: one enumeration pass computing all r
    pairings per vector, with exact character sums via residue counting.

    For each orbit j and representative y_i the nonzero-residue counts must be
    uniform (rationality witness); a_ij = p^-dim (N_j[0] - N_j[1]).
    """
    rep, p = _rep_p(rep, field_or_p)
    field = PrimeField(p)
    ys = R.orbit_representatives(rep, field)
    for lab, y in zip(rep.labels, ys):
        got = R.classify(rep, y, p)
        if got != lab:
            raise R.ClassificationError(f"representative of {lab} classifies as {got}")
    hist = _histogram_pass(rep, p, ys, threads, budget, progress_interval)
    scale = p ** rep.dim
    m = [[None] * rep.r for _ in range(rep.r)]
    for i in range(rep.r):
        for j in range(rep.r):
            row = hist[i][j]
            tail = row[1:]
            if not (tail == tail[0]).all():
                raise RuntimeError(
                    f"non-uniform character histogram for orbit {rep.labels[j]} at "
                    f"y in {rep.labels[i]}: {row.tolist()} (would falsify rationality)")
            m[i][j] = Fraction(int(row[0]) - int(row[1]), scale)
    from .ftsolver import FTMatrix  # local import to avoid a module cycle
    return FTMatrix.from_entries(rep, p, m, method="oracle")


def _rep_p(rep, field_or_p):
    if isinstance(rep, str):
        rep = R.get_rep(rep)
    p = field_or_p.p if isinstance(field_or_p, PrimeField) else int(field_or_p)
    rep.check_prime(p)
    return rep, p


def _check_budget(total, budget):
    limit = budget if budget is not None else _budget()
    if total > limit:
        raise BudgetExceededError(total, limit)
