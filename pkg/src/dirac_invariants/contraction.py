"""Sandwich contractions of state tensors: parse, validate, plan and evaluate.

A pattern is written as whitespace-separated atoms, for example

    C[j m] Psi[j k] Psi[m n] C[k n]

Sandwich atoms C, C5, g0, g05 take two index letters (row, column). Tensor
atoms Psi and Psi* take one letter per particle. Every letter occurs exactly
twice: once in a sandwich atom and once in a tensor atom. Repeated letters are
summed over 0..3. The full grammar is in docs/pattern_grammar.md.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gamma import C, C5, G0, G05
from .states import StateTensor

SANDWICH_MATRICES = {"C": C, "C5": C5, "g0": G0, "g05": G05}
BILINEAR_KINDS = ("C", "C5")
TENSOR_ATOMS = ("Psi", "Psi*")
DENSE_LETTER_LIMIT = 10

_ATOM_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*\*?)\[([^\[\]]*)\]")


class PatternError(ValueError):
    """Base class for pattern diagnostics; `letter` names the offending index if any."""

    def __init__(self, message: str, letter: str | None = None):
        super().__init__(message)
        self.letter = letter


class SyntaxPatternError(PatternError):
    pass


class UnknownAtomError(PatternError):
    pass


class IndexCountError(PatternError):
    pass


class PlacementError(PatternError):
    pass


class ArityError(PatternError):
    pass


class SlotMismatchError(PatternError):
    pass


class ParityError(PatternError):
    pass


class ParticleMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Pairing:
    row: tuple[int, int]  # (factor, slot) attached to the matrix's first index
    col: tuple[int, int]  # (factor, slot) attached to the matrix's second index
    sandwich: str
    row_letter: str = "?"
    col_letter: str = "?"

    @property
    def slot(self) -> int:
        return self.row[1]


@dataclass(frozen=True)
class ContractionPattern:
    particles: int
    factors: tuple[bool, ...]  # True for a conjugated copy
    pairings: tuple[Pairing, ...]

    @property
    def bidegree(self) -> tuple[int, int]:
        k = sum(1 for f in self.factors if not f)
        return k, len(self.factors) - k

    @property
    def letters(self) -> int:
        return 2 * len(self.pairings)

    def bilinear_observers(self) -> frozenset[int]:
        """Particles with at least one C or C5 pairing."""
        return frozenset(p.slot for p in self.pairings if p.sandwich in BILINEAR_KINDS)

    def odd_parity_observers(self) -> frozenset[int]:
        """Particles with an odd number of C5 or g05 pairings."""
        counts = [0] * self.particles
        for p in self.pairings:
            if p.sandwich in ("C5", "g05"):
                counts[p.slot] += 1
        return frozenset(a for a, c in enumerate(counts) if c % 2)

    def to_text(self) -> str:
        names = [[None] * self.particles for _ in self.factors]
        atoms = []
        for p in self.pairings:
            names[p.row[0]][p.row[1]] = p.row_letter
            names[p.col[0]][p.col[1]] = p.col_letter
            atoms.append(f"{p.sandwich}[{p.row_letter} {p.col_letter}]")
        for conj, idx in zip(self.factors, names):
            atoms.append(("Psi*" if conj else "Psi") + "[" + " ".join(idx) + "]")
        return " ".join(atoms)


def parse(text: str) -> ContractionPattern:
    """Parse and validate a pattern string."""
    stripped = _ATOM_RE.sub(" ", text)
    if stripped.strip():
        raise SyntaxPatternError(f"cannot parse {stripped.strip()!r}; atoms look like NAME[a b ...]")
    atoms = [(m.group(1), m.group(2).split()) for m in _ATOM_RE.finditer(text)]
    if not atoms:
        raise SyntaxPatternError("empty pattern")

    sandwich_use: dict[str, tuple[int, int]] = {}  # letter -> (atom number, position)
    tensor_use: dict[str, tuple[int, int]] = {}  # letter -> (factor, slot)
    counts: dict[str, int] = {}
    sandwiches = []
    factors = []
    arity = None
    for name, letters in atoms:
        for ch in letters:
            if not re.fullmatch(r"[A-Za-z]", ch):
                raise SyntaxPatternError(f"index {ch!r} in {name}[...] must be a single letter", ch)
            counts[ch] = counts.get(ch, 0) + 1
        if name in SANDWICH_MATRICES:
            if len(letters) != 2:
                raise ArityError(f"{name}[...] takes exactly 2 indices, got {len(letters)}")
            for pos, ch in enumerate(letters):
                if ch in sandwich_use:
                    raise PlacementError(f"index {ch!r} appears in two sandwich positions", ch)
                sandwich_use[ch] = (len(sandwiches), pos)
            sandwiches.append((name, letters))
        elif name in TENSOR_ATOMS:
            if arity is None:
                arity = len(letters)
            elif len(letters) != arity:
                raise ArityError(
                    f"{name}[{' '.join(letters)}] has {len(letters)} indices but earlier tensors have {arity}")
            for slot, ch in enumerate(letters):
                if ch in tensor_use:
                    raise PlacementError(f"index {ch!r} appears in two tensor positions", ch)
                tensor_use[ch] = (len(factors), slot)
            factors.append(name == "Psi*")
        else:
            raise UnknownAtomError(
                f"unknown atom {name!r}; expected one of {', '.join([*SANDWICH_MATRICES, *TENSOR_ATOMS])}")

    for ch, n in counts.items():
        if n != 2:
            raise IndexCountError(f"index {ch!r} is used {n} time(s); every index must appear exactly twice", ch)
    if not factors:
        raise ArityError("pattern has no Psi or Psi* atoms")
    for ch in counts:
        if ch not in sandwich_use:
            raise PlacementError(f"index {ch!r} joins two tensors directly; it must pass through a sandwich atom", ch)
        if ch not in tensor_use:
            raise PlacementError(f"index {ch!r} joins two sandwich atoms; it must attach to a tensor", ch)

    pairings = []
    for name, (a, b) in sandwiches:
        fa, sa = tensor_use[a]
        fb, sb = tensor_use[b]
        if sa != sb:
            raise SlotMismatchError(
                f"{name}[{a} {b}] joins slot {sa} of one tensor with slot {sb} of another; "
                f"indices must belong to the same particle", a)
        same = factors[fa] == factors[fb]
        if name in BILINEAR_KINDS and not same:
            raise ParityError(f"index '{a}': {name}[{a} {b}] must sit between two Psi or two Psi* copies", a)
        if name not in BILINEAR_KINDS and same:
            raise ParityError(f"index '{a}': {name}[{a} {b}] must sit between one Psi and one Psi* copy", a)
        pairings.append(Pairing((fa, sa), (fb, sb), name, a, b))
    return ContractionPattern(arity, tuple(factors), tuple(pairings))


def _check_state(p: ContractionPattern, s: StateTensor) -> np.ndarray:
    if s.particles != p.particles:
        raise ParticleMismatchError(f"pattern is for {p.particles} particles, state has {s.particles}")
    return s.tensor


@lru_cache(maxsize=None)
def _sparse_entries(name: str):
    M = SANDWICH_MATRICES[name]
    r, c = np.nonzero(M)
    return r, c, M[r, c]


def evaluate_naive(p: ContractionPattern, s: StateTensor, dense: bool = False) -> complex:
    """Reference evaluator: the explicit sum over index assignments.

    By default only assignments where every sandwich matrix entry is nonzero
    are enumerated; every skipped term is exactly zero. `dense=True` runs the
    literal sum over all 4**letters assignments (small patterns only).
    """
    t = _check_state(p, s)
    tc = t.conj()
    n_pair = len(p.pairings)
    if dense:
        if p.letters > DENSE_LETTER_LIMIT:
            raise ValueError(f"dense evaluation limited to {DENSE_LETTER_LIMIT} index letters")
        grids = np.indices((4,) * p.letters).reshape(p.letters, -1)
        rows, cols = grids[0::2], grids[1::2]
        weight = np.ones(grids.shape[1], dtype=complex)
        for k, pr in enumerate(p.pairings):
            weight = weight * SANDWICH_MATRICES[pr.sandwich][rows[k], cols[k]]
    else:
        entries = [_sparse_entries(pr.sandwich) for pr in p.pairings]
        choice = np.indices(tuple(len(e[0]) for e in entries)).reshape(n_pair, -1)
        rows = np.array([entries[k][0][choice[k]] for k in range(n_pair)])
        cols = np.array([entries[k][1][choice[k]] for k in range(n_pair)])
        weight = np.prod(np.array([entries[k][2][choice[k]] for k in range(n_pair)]), axis=0)
    slot_idx = [[None] * p.particles for _ in p.factors]
    for k, pr in enumerate(p.pairings):
        slot_idx[pr.row[0]][pr.row[1]] = rows[k]
        slot_idx[pr.col[0]][pr.col[1]] = cols[k]
    total = weight
    for f, conj in enumerate(p.factors):
        src = tc if conj else t
        total = total * src[tuple(slot_idx[f])]
    return complex(total.sum())


@dataclass(frozen=True)
class PlanStep:
    left: int
    right: int
    contracted: str
    result_letters: str
    flops: int


@dataclass(frozen=True)
class EvaluationPlan:
    operand_letters: tuple[str, ...]
    operand_kinds: tuple[str, ...]  # "Psi", "Psi*" or a sandwich name
    steps: tuple[PlanStep, ...]
    flops: int
    naive_flops: int

    def describe(self) -> list[str]:
        out = []
        for k, st in enumerate(self.steps):
            out.append(f"step {k}: merge #{st.left} and #{st.right} over '{st.contracted}' "
                       f"-> [{st.result_letters}] ({st.flops} flops)")
        return out


@lru_cache(maxsize=4096)
def plan(p: ContractionPattern) -> EvaluationPlan:
    """Greedy pairwise ordering: smallest intermediate first, then fewest flops."""
    letters = []
    kinds = []
    slot_names = [[None] * p.particles for _ in p.factors]
    for pr in p.pairings:
        slot_names[pr.row[0]][pr.row[1]] = pr.row_letter
        slot_names[pr.col[0]][pr.col[1]] = pr.col_letter
    for conj, names in zip(p.factors, slot_names):
        letters.append("".join(names))
        kinds.append("Psi*" if conj else "Psi")
    for pr in p.pairings:
        letters.append(pr.row_letter + pr.col_letter)
        kinds.append(pr.sandwich)

    live = {k: frozenset(v) for k, v in enumerate(letters)}
    order = {k: v for k, v in enumerate(letters)}
    steps = []
    total = 0
    next_id = len(letters)
    while len(live) > 1:
        best = None
        keys = sorted(live)
        for a, b in itertools.combinations(keys, 2):
            shared = live[a] & live[b]
            result = live[a] ^ live[b]
            key = (0 if shared else 1, len(result), len(live[a] | live[b]), a, b)
            if best is None or key < best[0]:
                best = (key, a, b, shared, result)
        _, a, b, shared, result = best
        union = live[a] | live[b]
        out = "".join(ch for ch in order[a] + order[b] if ch in result)
        flops = 4 ** len(union)
        steps.append(PlanStep(a, b, "".join(sorted(shared)), out, flops))
        total += flops
        del live[a], live[b]
        live[next_id] = frozenset(result)
        order[next_id] = out
        next_id += 1
    return EvaluationPlan(tuple(letters), tuple(kinds), tuple(steps), total, 4 ** p.letters)


def execute(ep: EvaluationPlan, t: np.ndarray) -> complex:
    tc = t.conj()
    ops: dict[int, tuple[np.ndarray, str]] = {}
    for k, (lt, kind) in enumerate(zip(ep.operand_letters, ep.operand_kinds)):
        if kind == "Psi":
            ops[k] = (t, lt)
        elif kind == "Psi*":
            ops[k] = (tc, lt)
        else:
            ops[k] = (SANDWICH_MATRICES[kind], lt)
    next_id = len(ops)
    for st in ep.steps:
        (x, lx), (y, ly) = ops.pop(st.left), ops.pop(st.right)
        ops[next_id] = (np.einsum(f"{lx},{ly}->{st.result_letters}", x, y), st.result_letters)
        next_id += 1
    (val, _), = ops.values()
    return complex(val)


def evaluate(p: ContractionPattern, s: StateTensor) -> complex:
    """Value of the pattern on a state, computed with the cached plan."""
    t = _check_state(p, s)
    return execute(plan(p), t)


@lru_cache(maxsize=None)
def parse_cached(text: str) -> ContractionPattern:
    return parse(text)
