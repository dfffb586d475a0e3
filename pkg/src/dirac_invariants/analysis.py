"""Weight-vector balancedness tests and numeric ranks of invariant families.

The weight of a spinor basis index is the eigenvalue of g1 g2 divided by i:
+1 for indices 1 and 3, -1 for indices 0 and 2. Balancedness (zero in the
convex hull of the weights) and affine balancedness (zero in the affine hull)
are decided exactly in rational arithmetic.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import catalog
from .lorentz import random_rotation
from .states import StateTensor, apply_each, random_state

INDEX_WEIGHT = (-1, +1, -1, +1)
DEFAULT_FRAMES = 50


@dataclass(frozen=True)
class WeightSystem:
    support: tuple
    weights: tuple
    balanced: bool | None = None
    affinely_balanced: bool | None = None

    def distinct(self) -> tuple:
        return tuple(sorted(set(self.weights)))


def weight_vectors(s: StateTensor, support_epsilon: float = 1e-10) -> WeightSystem:
    """Support (coefficients above epsilon * max |coefficient|) and its weights."""
    if support_epsilon < 0:
        raise ValueError("support_epsilon must be nonnegative")
    mags = np.abs(s.flat)
    top = float(mags.max()) if mags.size else 0.0
    if top == 0.0:
        raise ValueError("state has empty support")
    shape = s.tensor.shape
    support = tuple(tuple(int(i) for i in np.unravel_index(k, shape))
                    for k in np.flatnonzero(mags > support_epsilon * top))
    weights = tuple(tuple(INDEX_WEIGHT[j] for j in idx) for idx in support)
    return WeightSystem(support, weights)


def _feasible(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Is {x >= 0 : rows @ x = rhs} nonempty? Phase-one simplex, Bland's rule."""
    m, n = len(rows), len(rows[0])
    # make rhs nonnegative, then add one artificial per row
    tab = []
    for r, b in zip(rows, rhs):
        if b < 0:
            r, b = [-v for v in r], -b
        tab.append(list(r) + [Fraction(0)] * m + [b])
    for i in range(m):
        tab[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    width = n + m
    # objective: minimize sum of artificials, reduced costs in cost row
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            cost[j] -= tab[i][j]
    for i in range(m):
        cost[n + i] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded cannot happen in phase one
            break
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[-1] == 0


def _system(weights) -> tuple[list[list[Fraction]], list[Fraction]]:
    w = [tuple(v) for v in weights]
    if not w:
        raise ValueError("need at least one weight vector")
    n = len(w[0])
    rows = [[Fraction(v[a]) for v in w] for a in range(n)]
    rows.append([Fraction(1)] * len(w))
    return rows, [Fraction(0)] * n + [Fraction(1)]


def _weights(w):
    return w.weights if isinstance(w, WeightSystem) else tuple(tuple(v) for v in w)


def is_balanced(w) -> bool:
    """Zero lies in the convex hull of the weight vectors."""
    rows, rhs = _system(_weights(w))
    return _feasible(rows, rhs)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank, ncol = 0, len(rows[0]) if rows else 0
    for c in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def is_affinely_balanced(w) -> bool:
    """Zero is an affine combination of the weight vectors (exact rank test)."""
    rows, rhs = _system(_weights(w))
    aug = [r + [b] for r, b in zip(rows, rhs)]
    return _rank(rows) == _rank(aug)


def analyze(s: StateTensor, support_epsilon: float = 1e-10) -> WeightSystem:
    ws = weight_vectors(s, support_epsilon)
    return WeightSystem(ws.support, ws.weights, is_balanced(ws), is_affinely_balanced(ws))


@dataclass(frozen=True)
class FrameSweep:
    frames: int
    balanced_frames: int
    affinely_balanced_frames: int

    @property
    def unbalanced_frame_found(self) -> bool:
        return self.balanced_frames < self.frames

    @property
    def affinely_unbalanced_frame_found(self) -> bool:
        return self.affinely_balanced_frames < self.frames


def frame_sweep(s: StateTensor, frames: int = DEFAULT_FRAMES, seed: int = 0,
                support_epsilon: float = 1e-10) -> FrameSweep:
    """Repeat the verdicts after random local rotations of every particle.

    Finding a frame where a verdict is negative can only show failure of the
    frame-independent condition; all-positive sweeps prove nothing.
    """
    rng = np.random.default_rng(seed)
    nb = na = 0
    for _ in range(frames):
        rot = [random_rotation(rng) for _ in range(s.particles)]
        ws = weight_vectors(apply_each(s, rot), support_epsilon)
        nb += is_balanced(ws)
        na += is_affinely_balanced(ws)
    return FrameSweep(frames, nb, na)


# ------------------------------------------------------------------ ranks

@dataclass(frozen=True)
class RankReport:
    names: tuple
    rank: int
    singular_values: np.ndarray = field(repr=False)
    tol_rel: float = 1e-8

    @property
    def smallest_retained(self) -> float:
        return float(self.singular_values[self.rank - 1]) if self.rank else 0.0

    @property
    def largest_discarded(self) -> float:
        sv = self.singular_values
        return float(sv[self.rank]) if self.rank < len(sv) else 0.0


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SPINOR_INV_THREADS", "1")))
    except ValueError:
        return 1


def value_matrix(names, n_states: int, seed: int = 0) -> np.ndarray:
    """names x states matrix of invariant values on seeded random states."""
    names = list(names)
    counts = {catalog.get(n).particles for n in names}
    if len(counts) != 1:
        raise ValueError(f"names mix particle counts {sorted(counts)}")
    (n,) = counts
    states = [random_state(n, seed * 100003 + k) for k in range(n_states)]

    def column(s):
        vals = catalog.eval_many(names, s)
        return [vals[name] for name in names]

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            cols = list(ex.map(column, states))
    else:
        cols = [column(s) for s in states]
    return np.array(cols, dtype=complex).T


def numeric_rank_report(names, n_states: int | None = None, seed: int = 0,
                        tol_rel: float = 1e-8) -> RankReport:
    names = tuple(names)
    if n_states is None:
        n_states = 2 * len(names) + 8
    if n_states < 2 * len(names):
        raise ValueError("n_states must be at least twice the number of names")
    m = value_matrix(names, n_states, seed)
    # normalize rows so differing magnitudes do not mask independence
    scale = np.linalg.norm(m, axis=1, keepdims=True)
    m = m / np.where(scale == 0, 1.0, scale)
    sv = np.linalg.svd(m, compute_uv=False)
    rank = int(np.sum(sv > tol_rel * sv[0])) if sv.size and sv[0] > 0 else 0
    return RankReport(names, rank, sv, tol_rel)


def numeric_rank(names, n_states: int | None = None, seed: int = 0, tol_rel: float = 1e-8) -> int:
    return numeric_rank_report(names, n_states, seed, tol_rel).rank


def family_names(family: str) -> tuple:
    try:
        return catalog.FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}; known: {', '.join(catalog.FAMILIES)}") from None
