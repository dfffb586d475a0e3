"""Named invariant polynomials for two and three Dirac particles.

Each invariant is an expression over contraction patterns and other named
invariants: a sum of terms, each a scalar times a product of factors, where a
factor may be complex conjugated. Two-particle traces such as
Tr[Psi^T C Psi C] are written as strings and translated to index patterns.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import expansions
from .contraction import ContractionPattern, evaluate, evaluate_naive, parse
from .states import StateTensor, random_state

ALL_PARTICLES = "all_particles"
SUBSET = "subset"
NOT_INDICATOR = "not_indicator"


@dataclass(frozen=True)
class Scope:
    """Which product structures an invariant is blind to.

    `all_particles`: vanishes whenever any particle is unentangled from the rest.
    `subset`: vanishes whenever a particle in `observers` is unentangled, and on
    full product states; it may be nonzero when another particle factors out.
    `not_indicator`: nonzero on some product states.
    """
    kind: str
    observers: frozenset = frozenset()

    def label(self) -> str:
        if self.kind != SUBSET:
            return self.kind
        names = "".join("ABC"[k] for k in sorted(self.observers))
        return f"subset({names})" if names else "subset()"


class Expr:
    """Sum of coeff * product of (atom, conjugated) factors."""

    def __init__(self, terms):
        self.terms = tuple((complex(c), tuple(fs)) for c, fs in terms)

    def __add__(self, other):
        return Expr(self.terms + other.terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        return Expr((scalar * c, fs) for c, fs in self.terms)

    def __mul__(self, other):
        if not isinstance(other, Expr):
            return other * self
        return Expr((c1 * c2, f1 + f2) for c1, f1 in self.terms for c2, f2 in other.terms)

    def conj(self):
        return Expr((np.conj(c), tuple((a, not cj) for a, cj in fs)) for c, fs in self.terms)

    def patterns(self):
        return [a for _, fs in self.terms for a, _ in fs if isinstance(a, ContractionPattern)]


def pat(text: str) -> Expr:
    return Expr([(1, ((parse(text), False),))])


def ref(name: str) -> Expr:
    return Expr([(1, ((name, False),))])


_TRACE_ATOMS = {"Psi", "PsiT", "Psis", "Psid", "C", "C5", "g0", "g05"}


def trace_pattern(text: str) -> str:
    """Translate 'PsiT C Psi C' (a two-particle trace) into pattern text.

    Psi is the 4x4 coefficient matrix, PsiT its transpose, Psis its entrywise
    conjugate and Psid its conjugate transpose.
    """
    atoms = text.split()
    if len(atoms) > 26:
        raise ValueError("trace too long")
    for a in atoms:
        if a not in _TRACE_ATOMS:
            raise ValueError(f"unknown trace atom {a!r}")
    letters = string.ascii_lowercase
    out = []
    n = len(atoms)
    for k, a in enumerate(atoms):
        r, c = letters[k], letters[(k + 1) % n]
        if a == "Psi":
            out.append(f"Psi[{r} {c}]")
        elif a == "PsiT":
            out.append(f"Psi[{c} {r}]")
        elif a == "Psis":
            out.append(f"Psi*[{r} {c}]")
        elif a == "Psid":
            out.append(f"Psi*[{c} {r}]")
        else:
            out.append(f"{a}[{r} {c}]")
    return " ".join(out)


def tr(text: str) -> Expr:
    return pat(trace_pattern(text))


@dataclass(frozen=True)
class NamedInvariant:
    name: str
    particles: int
    bidegree: tuple[int, int]
    primary: Expr
    alt_forms: tuple = ()
    scope: Scope = Scope(ALL_PARTICLES)
    expansion: Callable | None = None
    description: str = ""

    def forms(self) -> list[Expr]:
        return [self.primary, *self.alt_forms]


_REGISTRY: dict[str, NamedInvariant] = {}
_ORDER: list[str] = []


def _atom_bidegree(atom) -> tuple[int, int]:
    if isinstance(atom, ContractionPattern):
        return atom.bidegree
    return _REGISTRY[atom].bidegree


def _expr_bidegree(e: Expr) -> tuple[int, int]:
    degs = set()
    for _, fs in e.terms:
        k = l = 0
        for a, cj in fs:
            dk, dl = _atom_bidegree(a)
            if cj:
                dk, dl = dl, dk
            k += dk
            l += dl
        degs.add((k, l))
    if len(degs) != 1:
        raise ValueError(f"inhomogeneous expression with bidegrees {sorted(degs)}")
    return degs.pop()


def _expr_particles(e: Expr) -> int:
    ns = set()
    for _, fs in e.terms:
        for a, _ in fs:
            ns.add(a.particles if isinstance(a, ContractionPattern) else _REGISTRY[a].particles)
    if len(ns) != 1:
        raise ValueError("expression mixes particle counts")
    return ns.pop()


def _register(name, primary, alt=(), scope=Scope(ALL_PARTICLES), expansion=None, description=""):
    if name in _REGISTRY:
        raise ValueError(f"duplicate invariant {name}")
    bideg = _expr_bidegree(primary)
    for f in alt:
        if _expr_bidegree(f) != bideg:
            raise ValueError(f"{name}: alternate form has a different bidegree")
    inv = NamedInvariant(name, _expr_particles(primary), bideg, primary, tuple(alt), scope,
                         expansion, description)
    _REGISTRY[name] = inv
    _ORDER.append(name)
    return inv


def _abs2(name: str) -> Expr:
    return ref(name) * ref(name).conj()


def _cross(a: str, b: str) -> Expr:
    return ref(a) * ref(b).conj()


# ---------------------------------------------------------------- two particles

NOT_IND = Scope(NOT_INDICATOR)

_register("I1", 0.5 * tr("PsiT C Psi C"), expansion=expansions.I1, description="1/2 Tr[Psi^T C Psi C]")
_register("I2", 0.5 * tr("PsiT C5 Psi C5"), expansion=expansions.I2, description="1/2 Tr[Psi^T C5 Psi C5]")
_register("I2A", 0.5 * tr("PsiT C Psi C5"), expansion=expansions.I2A, description="1/2 Tr[Psi^T C Psi C5]")
_register("I2B", 0.5 * tr("PsiT C5 Psi C"), expansion=expansions.I2B, description="1/2 Tr[Psi^T C5 Psi C]")

_register("N1", tr("PsiT g0 Psis g0"), scope=NOT_IND, description="Tr[Psi^T g0 Psi* g0]")
_register("N2", tr("PsiT g05 Psis g0"), scope=NOT_IND, description="Tr[Psi^T g05 Psi* g0]")
_register("N3", tr("PsiT g0 Psis g05"), scope=NOT_IND, description="Tr[Psi^T g0 Psi* g05]")
_register("N4", tr("PsiT g05 Psis g05"), scope=NOT_IND, description="Tr[Psi^T g05 Psi* g05]")


def _r(left: str, right: str) -> tuple[Expr, Expr]:
    """The g0 and g05 sandwiches of a two-particle R-type trace."""
    return 0.5 * tr(f"{left} g0 {right} g0"), 0.5 * tr(f"{left} g05 {right} g05")


_r1, _r1b = _r("PsiT C Psi", "Psid C Psis")
_r2, _r2b = _r("PsiT C5 Psi", "Psid C Psis")
_r3, _r3b = _r("PsiT C5 Psi", "Psid C5 Psis")
_r4, _r4b = _r("Psi C PsiT", "Psis C Psid")
_r5, _r5b = _r("Psi C5 PsiT", "Psis C Psid")
_r6, _r6b = _r("Psi C5 PsiT", "Psis C5 Psid")

_register("R1", _r1, [_r1b - _abs2("I2A") + _abs2("I1")], expansion=expansions.R1,
          description="1/2 Tr[Psi^T C Psi g0 Psi^dag C Psi* g0]")
_register("R2", _r2, [_r2b + _cross("I2B", "I1") - _cross("I2", "I2A")], expansion=expansions.R2,
          description="1/2 Tr[Psi^T C5 Psi g0 Psi^dag C Psi* g0]")
_register("R3", _r3, [_r3b + _abs2("I2B") - _abs2("I2")], expansion=expansions.R3,
          description="1/2 Tr[Psi^T C5 Psi g0 Psi^dag C5 Psi* g0]")
_register("R4", _r4, [_r4b - _abs2("I2B") + _abs2("I1")], expansion=expansions.R4,
          description="1/2 Tr[Psi C Psi^T g0 Psi* C Psi^dag g0]")
_register("R5", _r5, [_r5b + _cross("I2A", "I1") - _cross("I2", "I2B")], expansion=expansions.R5,
          description="1/2 Tr[Psi C5 Psi^T g0 Psi* C Psi^dag g0]")
_register("R6", _r6, [_r6b + _abs2("I2A") - _abs2("I2")], expansion=expansions.R6,
          description="1/2 Tr[Psi C5 Psi^T g0 Psi* C5 Psi^dag g0]")
_register("R2c", ref("R2").conj(), description="complex conjugate of R2")
_register("R5c", ref("R5").conj(), description="complex conjugate of R5")


def _nn(a: str, b: str) -> Expr:
    return ref(a) * ref(b)


_register(
    "T1",
    tr("PsiT g0 Psis g0 PsiT g0 Psis g0") - _nn("N1", "N1"),
    [
        -tr("PsiT g05 Psis g0 PsiT g05 Psis g0") + _nn("N2", "N2") + 2 * ref("R3") - 2 * ref("R1"),
        -tr("PsiT g0 Psis g05 PsiT g0 Psis g05") + _nn("N3", "N3") + 2 * ref("R6") - 2 * ref("R4"),
        tr("PsiT g05 Psis g05 PsiT g05 Psis g05") - _nn("N4", "N4")
        + 2 * ref("R3") - 2 * ref("R1") - 2 * ref("R4") + 2 * ref("R6")
        - _abs2("I2B") + _abs2("I2") + 2 * _abs2("I1") - 2 * _abs2("I2A"),
    ],
    expansion=expansions.T1,
    description="Tr[Psi^T g0 Psi* g0 Psi^T g0 Psi* g0] - N1^2",
)
_register(
    "T2",
    tr("PsiT g05 Psis g05 PsiT g0 Psis g0") - tr("Psid g05 Psi g05 Psid g0 Psi g0"),
    [-tr("PsiT g05 Psis g0 PsiT g0 Psis g05") + tr("Psid g05 Psi g0 Psid g0 Psi g05")],
    expansion=expansions.T2,
    description="Tr[Psi^T g05 Psi* g05 Psi^T g0 Psi* g0] - Tr[Psi^dag g05 Psi g05 Psi^dag g0 Psi g0]",
)
_register("N1N4mN2N3", _nn("N1", "N4") - _nn("N2", "N3"), expansion=expansions.N1N4mN2N3,
          description="N1 N4 - N2 N3")


def _q(trace: str, sign: int, i_name: str, n_name: str) -> Expr:
    return sign * tr(trace) - sign * _nn(i_name, n_name)


_register("Q1", _q("PsiT C Psi C PsiT g0 Psis g0", 1, "I1", "N1"), [
    _q("PsiT C5 Psi C5 PsiT g05 Psis g05", -1, "I2", "N4"),
    _q("PsiT C Psi C5 PsiT g0 Psis g05", -1, "I2A", "N3"),
    _q("PsiT C5 Psi C PsiT g05 Psis g0", 1, "I2B", "N2"),
], expansion=expansions.Q1, description="Tr[Psi^T C Psi C Psi^T g0 Psi* g0] - I1 N1")
_register("Q2", _q("PsiT C5 Psi C5 PsiT g0 Psis g0", 1, "I2", "N1"), [
    _q("PsiT C Psi C PsiT g05 Psis g05", -1, "I1", "N4"),
    _q("PsiT C Psi C5 PsiT g05 Psis g0", 1, "I2A", "N2"),
    _q("PsiT C5 Psi C PsiT g0 Psis g05", -1, "I2B", "N3"),
], expansion=expansions.Q2, description="Tr[Psi^T C5 Psi C5 Psi^T g0 Psi* g0] - I2 N1")
_register("Q3", _q("PsiT C5 Psi C PsiT g0 Psis g0", 1, "I2B", "N1"), [
    _q("PsiT C Psi C PsiT g05 Psis g0", 1, "I1", "N2"),
    _q("PsiT C5 Psi C5 PsiT g0 Psis g05", -1, "I2", "N3"),
    _q("PsiT C Psi C5 PsiT g05 Psis g05", -1, "I2A", "N4"),
], expansion=expansions.Q3, description="Tr[Psi^T C5 Psi C Psi^T g0 Psi* g0] - I2B N1")
_register("Q4", _q("PsiT C Psi C5 PsiT g0 Psis g0", 1, "I2A", "N1"), [
    _q("PsiT C Psi C PsiT g0 Psis g05", -1, "I1", "N3"),
    _q("PsiT C5 Psi C5 PsiT g05 Psis g0", 1, "I2", "N2"),
    _q("PsiT C5 Psi C PsiT g05 Psis g05", -1, "I2B", "N4"),
], expansion=expansions.Q4, description="Tr[Psi^T C Psi C5 Psi^T g0 Psi* g0] - I2A N1")

I_NAMES = ("I1", "I2", "I2A", "I2B")
N_NAMES = ("N1", "N2", "N3", "N4")

for _a in I_NAMES:
    for _b in I_NAMES:
        _register(f"{_a}.{_b}c", _cross(_a, _b), description=f"{_a} times conj({_b})")
for _a in I_NAMES:
    for _n in N_NAMES:
        _register(f"{_a}.{_n}", _nn(_a, _n), description=f"{_a} times {_n}")

# -------------------------------------------------------------- three particles

_V_SANDWICH = {
    1: ("g0", "g0", "g0"), 2: ("g05", "g0", "g0"), 3: ("g0", "g05", "g0"), 4: ("g0", "g0", "g05"),
    5: ("g05", "g05", "g0"), 6: ("g05", "g0", "g05"), 7: ("g0", "g05", "g05"), 8: ("g05", "g05", "g05"),
}
for _k, (_a, _b, _c) in _V_SANDWICH.items():
    _register(f"V{_k}", pat(f"{_a}[l i] {_b}[m j] {_c}[n k] Psi*[i j k] Psi[l m n]"), scope=NOT_IND,
              description=f"{_a} (x) {_b} (x) {_c} sandwich of Psi* and Psi")

V_DIFFERENCES = ((1, 8, 3, 6), (2, 7, 3, 6), (2, 7, 4, 5), (1, 7, 3, 4), (1, 5, 2, 3),
                 (1, 6, 2, 4), (2, 8, 5, 6), (4, 8, 6, 7), (3, 8, 5, 7))


def _obs(*names) -> Scope:
    return Scope(SUBSET, frozenset("ABC".index(n) for n in names))


_V1SQ = _nn("V1", "V1")
_TWO_TWO_THREE = {
    "B03_1": ("g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[q m n] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[i p u]",
              True, _obs("A")),
    "D03_1": ("g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[i p n] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[q m u]",
              True, _obs("B")),
    "Z03_1": ("g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[i m u] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[q p n]",
              True, _obs("C")),
    "B21_1": ("g0[i j] C[m k] C[n l] Psi[j k l] Psi[q m n] g0[q r] C[p s] C[u t] Psi*[r s t] Psi*[i p u]",
              False, _obs("B", "C")),
    "D21_1": ("C[i j] g0[m k] C[n l] Psi[j k l] Psi[i p n] C[q r] g0[p s] C[u t] Psi*[r s t] Psi*[q m u]",
              False, _obs("A", "C")),
    "Z21_1": ("C[i j] C[m k] g0[n l] Psi[j k l] Psi[i m u] C[q r] C[p s] g0[u t] Psi*[r s t] Psi*[q p n]",
              False, _obs("A", "B")),
    "B12_1": ("C[i j] g0[m k] g0[n l] Psi*[j k l] Psi[q m n] C[q r] g0[p s] g0[u t] Psi[r s t] Psi*[i p u]",
              False, _obs("A")),
    "D12_1": ("g0[i j] C[m k] g0[n l] Psi*[j k l] Psi[i p n] g0[q r] C[p s] g0[u t] Psi[r s t] Psi*[q m u]",
              False, _obs("B")),
    "Z12_1": ("g0[i j] g0[m k] C[n l] Psi*[j k l] Psi[i m u] g0[q r] g0[p s] C[u t] Psi[r s t] Psi*[q p n]",
              False, _obs("C")),
    "X12A_1": ("g0[i j] C[m k] g0[n l] Psi*[j k l] Psi[i p t] g0[q r] C[p s] g0[u t] Psi[r s n] Psi*[q m u]",
               False, _obs("B")),
    "X12B_1": ("C[i j] g0[m k] g0[n l] Psi[j k l] Psi[i p t] C[q r] g0[p s] g0[u t] Psi*[r s n] Psi*[q m u]",
               False, _obs("A")),
    "X12C_1": ("g0[i j] g0[m k] C[n l] Psi[j k l] Psi*[i p t] g0[q r] g0[p s] C[u t] Psi[r s n] Psi*[q m u]",
               False, _obs("C")),
}
for _name, (_text, _minus_v1sq, _scope) in _TWO_TWO_THREE.items():
    _e = pat(_text)
    _register(_name, _e - _V1SQ if _minus_v1sq else _e, scope=_scope,
              description=_text + (" - V1^2" if _minus_v1sq else ""))

for _a, _b, _c, _d in V_DIFFERENCES:
    _register(f"V{_a}V{_b}mV{_c}V{_d}", _nn(f"V{_a}", f"V{_b}") - _nn(f"V{_c}", f"V{_d}"),
              scope=Scope(SUBSET), description=f"V{_a} V{_b} - V{_c} V{_d}")

_FOUR = "Psi[i j k] Psi[l m n] Psi[o p q] Psi*[r s t]"
_THREE_ONE = {
    "X1": "C[i l] C[j p] C[n q] g0[k t] g0[m s] g0[o r]",
    "X2": "C[i l] C[j p] C5[n q] g0[o r] g0[m s] g05[k t]",
    "X3": "C5[i l] C[j p] C[n q] g05[o r] g0[m s] g0[k t]",
    "X4": "C[i l] C5[j p] C[n q] g0[k t] g05[m s] g0[o r]",
    "X5": "C5[i l] C5[j p] C[n q] g05[o r] g05[m s] g0[k t]",
    "X6": "C[i l] C5[j p] C5[n q] g0[o r] g05[m s] g05[k t]",
    "X7": "C5[i l] C[j p] C5[n q] g05[o r] g0[m s] g05[k t]",
    "X8": "C5[i l] C5[j p] C5[n q] g05[o r] g05[m s] g05[k t]",
    "Z1": "C[i l] C[j m] C[n q] g0[k t] g0[p s] g0[o r]",
    "Z2": "C[i l] C[j m] C5[n q] g0[o r] g0[p s] g05[k t]",
    "Z3": "C5[i l] C[j m] C[n q] g05[o r] g0[p s] g0[k t]",
    "Z4": "C[i l] C5[j m] C[n q] g0[o r] g05[p s] g0[k t]",
    "Z5": "C5[i l] C5[j m] C[n q] g05[o r] g05[p s] g0[k t]",
    "Z6": "C[i l] C5[j m] C5[n q] g0[o r] g05[p s] g05[k t]",
    "Z7": "C5[i l] C5[j m] C[n q] g05[o r] g0[p s] g05[k t]",
    "Z8": "C5[i l] C5[j m] C5[n q] g05[o r] g05[p s] g05[k t]",
    "B1": "C[i o] C[j m] C[k n] g0[l r] g0[p s] g0[q t]",
    "B2": "C[i o] C[j m] C5[k n] g0[l r] g0[p s] g05[q t]",
    "B3": "C5[i o] C[j m] C[k n] g05[l r] g0[p s] g0[q t]",
    "B4": "C[i o] C5[j m] C[k n] g0[l r] g05[p s] g0[q t]",
    "B5": "C5[i o] C5[j m] C[k n] g05[l r] g05[p s] g0[q t]",
    "B6": "C[i o] C5[j m] C5[k n] g0[l r] g05[p s] g05[q t]",
    "B7": "C5[i o] C[j m] C5[k n] g05[l r] g0[p s] g05[q t]",
    "B8": "C5[i o] C5[j m] C5[k n] g05[l r] g05[p s] g05[q t]",
    "D1": "C[i l] C[j p] C[k n] g0[o r] g0[m s] g0[q t]",
    "D2": "C[i l] C[j p] C5[k n] g0[o r] g0[m s] g05[q t]",
    "D3": "C5[i l] C[j p] C[k n] g05[o r] g0[m s] g0[q t]",
    "D4": "C[i l] C5[j p] C[k n] g0[o r] g05[m s] g0[q t]",
    "D5": "C5[i l] C[j p] C5[k n] g05[o r] g0[m s] g05[q t]",
    "D6": "C[i l] C5[j p] C5[k n] g0[o r] g05[m s] g05[q t]",
    "D7": "C5[i l] C5[j p] C[k n] g05[o r] g05[m s] g0[q t]",
    "D8": "C5[i l] C5[j p] C5[k n] g05[o r] g05[m s] g05[q t]",
}
for _name, _sand in _THREE_ONE.items():
    _register(_name, pat(f"{_sand} {_FOUR}"), description=f"{_sand} {_FOUR}")

DEPENDENCY_EQUATIONS = (
    {"X7": 1, "X3": 1, "B7": -1, "B3": -1, "Z7": 1, "Z3": 1},
    {"X6": 1, "X4": 1, "B4": -1, "B6": -1, "Z6": 1, "Z4": 1},
    {"X8": 1, "X5": 1, "B8": -1, "B5": -1, "Z8": 1, "Z5": 1},
    {"X1": 1, "X2": 1, "B1": -1, "B2": -1, "Z1": 1, "Z2": 1},
    {"X5": 1, "X4": 1, "Z5": -1, "Z4": -1, "D5": 1, "D4": 1},
    {"X8": 1, "X6": 1, "Z8": -1, "Z6": -1, "D8": 1, "D6": 1},
    {"X7": 1, "X2": 1, "Z7": -1, "Z2": -1, "D7": 1, "D2": 1},
    {"X1": 1, "X3": 1, "Z1": -1, "Z3": -1, "D1": 1, "D3": 1},
    {"X1": 1, "X4": 1, "D1": -1, "D4": -1, "B1": 1, "B4": 1},
    {"X7": 1, "X8": 1, "D8": -1, "D7": -1, "B7": 1, "B8": 1},
    {"X6": 1, "X2": 1, "D6": -1, "D2": -1, "B6": 1, "B2": 1},
    {"X5": 1, "X3": 1, "D5": -1, "D3": -1, "B5": 1, "B3": 1},
)

# Z7 with the C and C5 sandwiches of the B-B and C-C pairs exchanged: every
# other member of the family is even under parity on each particle, the
# literal Z7 is not.
Z7S_SANDWICH = "C5[i l] C[j m] C5[n q] g05[o r] g0[p s] g05[k t]"
_register("Z7s", pat(f"{Z7S_SANDWICH} {_FOUR}"), description=f"{Z7S_SANDWICH} {_FOUR}")
EXTRA_NAMES = frozenset({"Z7s"})
THREE_ONE_WITH_Z7S = tuple("Z7s" if n == "Z7" else n for n in _THREE_ONE)


def _pair_relation(letters, a, b):
    x, y, w = letters
    return {f"{x}{a}": 1, f"{x}{b}": -1, f"{y}{a}": 1, f"{y}{b}": -1, f"{w}{a}": -1, f"{w}{b}": 1}


# Relations X_a - X_b + Y_a - Y_b - W_a + W_b = 0 that hold once Z7 is replaced
# by Z7s; together they span the whole 12-dimensional relation space.
OBSERVED_DEPENDENCIES = tuple(
    {("Z7s" if k == "Z7" else k): v for k, v in rel.items()}
    for rel in (
        [_pair_relation("XBZ", a, b) for a, b in ((1, 4), (2, 6), (3, 5), (7, 8))]
        + [_pair_relation("XZD", a, b) for a, b in ((1, 3), (6, 8))]
        + [{"X2": 1, "X7": -1, "Z2": 1, "Z7": -1, "D2": -1, "D5": 1},
           {"X4": 1, "X5": -1, "Z4": 1, "Z5": -1, "D4": -1, "D7": 1}]
        + [_pair_relation("XDB", a, b) for a, b in ((1, 2), (4, 6))]
        + [{"X3": 1, "X7": -1, "D3": 1, "D5": -1, "B3": -1, "B7": 1},
           {"X5": 1, "X8": -1, "D7": 1, "D8": -1, "B5": -1, "B8": 1}]
    )
)

_K_TEXT = ("g0[i l] g0[j s] g0[k z] g0[m p] g0[n w] g0[o x] g0[q t] g0[r u] g0[v y] "
           "Psi[i j k] Psi*[l m n] Psi[o p q] Psi*[r s t] Psi[u v w] Psi*[x y z]")
W_TEXT = ("C[i l] C[j m] C[k q] g0[n t] g0[o u] g0[p s] C[r x] C[w z] C[v y] "
          "Psi*[i j k] Psi*[l m n] Psi*[o p q] Psi[r s t] Psi[u v w] Psi[x y z]")
_register("K1", pat(_K_TEXT) - ref("V1") * ref("V1") * ref("V1"), scope=Scope(SUBSET),
          description=_K_TEXT + " - V1^3")
_register("W1", pat(W_TEXT), description=W_TEXT)

# ------------------------------------------------------------------- families

FAMILIES = {
    "2p-(2,2)": tuple(f"{a}.{b}c" for a in I_NAMES for b in I_NAMES)
    + ("R1", "R2", "R2c", "R3", "R4", "R5", "R5c", "R6", "T1", "T2", "N1N4mN2N3"),
    "2p-(3,1)": ("Q1", "Q2", "Q3", "Q4") + tuple(f"{a}.{n}" for a in I_NAMES for n in N_NAMES),
    "3p-(2,2)-selected": tuple(_TWO_TWO_THREE)
    + tuple(f"V{a}V{b}mV{c}V{d}" for a, b, c, d in V_DIFFERENCES),
    "3p-(3,1)": tuple(_THREE_ONE),
}


# ---------------------------------------------------------------- evaluation

def get(name: str) -> NamedInvariant:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown invariant {name!r}; known names: {', '.join(_ORDER)}") from None


def list_names(particles: int | None = None, bidegree: tuple[int, int] | None = None,
               extras: bool = False) -> list[str]:
    """Registered names in definition order, optionally filtered.

    Names in EXTRA_NAMES (corrected variants) are listed only with extras=True.
    """
    out = []
    for name in _ORDER:
        if name in EXTRA_NAMES and not extras:
            continue
        inv = _REGISTRY[name]
        if particles is not None and inv.particles != particles:
            continue
        if bidegree is not None and inv.bidegree != tuple(bidegree):
            continue
        out.append(name)
    return out


def eval_expr(e: Expr, s: StateTensor, naive: bool = False, _memo=None) -> complex:
    memo = {} if _memo is None else _memo
    total = 0j
    for coeff, factors in e.terms:
        val = coeff
        for atom, cj in factors:
            key = id(atom) if isinstance(atom, ContractionPattern) else atom
            if key not in memo:
                if isinstance(atom, ContractionPattern):
                    memo[key] = evaluate_naive(atom, s) if naive else evaluate(atom, s)
                else:
                    inv = get(atom)
                    if inv.particles != s.particles:
                        raise ValueError(f"{atom} is a {inv.particles}-particle invariant")
                    memo[key] = eval_expr(inv.primary, s, naive, memo)
            v = memo[key]
            val *= np.conj(v) if cj else v
        total += val
    return complex(total)


def eval_named(name: str, s: StateTensor, naive: bool = False) -> complex:
    """Value of the primary form of `name` on state `s`."""
    inv = get(name)
    if inv.particles != s.particles:
        raise ValueError(f"{name} needs a {inv.particles}-particle state, got {s.particles} particles")
    return eval_expr(inv.primary, s, naive)


def eval_many(names, s: StateTensor) -> dict[str, complex]:
    """Evaluate several names sharing intermediate results."""
    memo: dict = {}
    out = {}
    for name in names:
        inv = get(name)
        if inv.particles != s.particles:
            raise ValueError(f"{name} needs a {inv.particles}-particle state, got {s.particles} particles")
        out[name] = eval_expr(inv.primary, s, False, memo)
    return out


def expansion_oracle(name: str, s: StateTensor) -> complex:
    """Written-out coefficient formula for `name`, independent of the engine."""
    inv = get(name)
    if inv.expansion is None:
        raise KeyError(f"no written-out expansion available for {name}")
    return complex(inv.expansion(s.tensor))


def _relative_spread(values, scale: float) -> float:
    values = np.asarray(values, dtype=complex)
    spread = np.max(np.abs(values - values[0]))
    return float(spread / max(np.max(np.abs(values)), scale))


def alt_forms_residual(name: str, s: StateTensor, include_expansion: bool = True) -> float:
    """Largest relative disagreement among all forms of `name` on `s`."""
    inv = get(name)
    forms = [eval_expr(f, s) for f in inv.forms()]
    if include_expansion and inv.expansion is not None:
        forms.append(expansion_oracle(name, s))
    if len(forms) < 2:
        raise ValueError(f"{name} has a single form")
    k, l = inv.bidegree
    return _relative_spread(forms, 1e-12 * s.norm() ** (k + l))


def dependency_residuals(n_states: int = 20, seed: int = 0, equations=DEPENDENCY_EQUATIONS) -> list[float]:
    """For each linear relation: max over random states of |sum| / sum of |terms|."""
    states = [random_state(3, seed + k) for k in range(n_states)]
    names = sorted({n for eq in equations for n in eq})
    values = [eval_many(names, s) for s in states]
    out = []
    for eq in equations:
        worst = 0.0
        for vals in values:
            lhs = sum(c * vals[n] for n, c in eq.items())
            den = sum(abs(vals[n]) for n in eq)
            worst = max(worst, abs(lhs) / den)
        out.append(worst)
    return out


def all_patterns(name: str) -> list[ContractionPattern]:
    """Every contraction pattern used by any form of `name`, without recursion into references."""
    inv = get(name)
    out = []
    for f in inv.forms():
        out.extend(f.patterns())
    return out


# Lab-swap relations: inv(swap(s, a, b)) == sign * target(s)
PERMUTATION_RELATIONS = (
    ("R1", (0, 1), "R4", 1),
    ("R2", (0, 1), "R5", 1),
    ("R3", (0, 1), "R6", 1),
    ("Q3", (0, 1), "Q4", 1),
    ("B21_1", (1, 2), "B21_1", 1),
    ("D21_1", (0, 2), "D21_1", 1),
    ("Z21_1", (0, 1), "Z21_1", 1),
    ("B12_1", (1, 2), "B12_1", 1),
    ("D12_1", (0, 2), "D12_1", 1),
    ("Z12_1", (0, 1), "Z12_1", 1),
    ("B03_1", (1, 2), "B03_1", 1),
    ("D03_1", (0, 2), "D03_1", 1),
    ("Z03_1", (0, 1), "Z03_1", 1),
    ("B1", (1, 2), "B1", 1),
    ("D1", (0, 2), "D1", 1),
    ("Z1", (0, 1), "Z1", 1),
)
