"""Multiparticle spinor state tensors.

A state of n particles is a complex tensor of shape (4,)*n. Axis a holds the
spinor index of particle a (A, B, C, ...); flat storage is row-major, so the
last particle's index varies fastest.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from importlib import resources

import numpy as np

from .gamma import basis_spinor, projector

MAX_RANDOM_PARTICLES = 4
PARTICLE_LABELS = "ABCDEFGH"


class StateTensor:
    """Immutable n-particle coefficient tensor."""

    __slots__ = ("_t",)

    def __init__(self, coefficients, particles: int | None = None):
        t = np.array(coefficients, dtype=complex)
        if particles is not None:
            if particles < 1:
                raise ValueError("need at least one particle")
            if t.size != 4 ** particles:
                raise ValueError(f"{particles} particles need {4 ** particles} coefficients, got {t.size}")
            t = t.reshape((4,) * particles)
        if t.ndim < 1 or any(d != 4 for d in t.shape):
            raise ValueError(f"state tensor must have shape (4,)*n, got {t.shape}")
        if not np.all(np.isfinite(t)):
            raise ValueError("state coefficients must be finite")
        t.setflags(write=False)
        self._t = t

    @property
    def tensor(self) -> np.ndarray:
        return self._t

    @property
    def particles(self) -> int:
        return self._t.ndim

    @property
    def flat(self) -> np.ndarray:
        return self._t.reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.flat))

    def normalized(self) -> "StateTensor":
        n = self.norm()
        if n == 0:
            raise ValueError("cannot normalize the zero state")
        return StateTensor(self._t / n)

    def scaled(self, lam: complex) -> "StateTensor":
        return StateTensor(lam * self._t)

    def __add__(self, other: "StateTensor") -> "StateTensor":
        return StateTensor(self._t + other._t)

    def __getitem__(self, idx):
        return self._t[idx]

    def __repr__(self):
        nz = np.flatnonzero(np.abs(self.flat) > 0)
        return f"StateTensor(particles={self.particles}, nonzero={len(nz)})"

    def to_json(self) -> dict:
        return {
            "particles": self.particles,
            "coefficients": [[float(c.real), float(c.imag)] for c in self.flat],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StateTensor":
        if not isinstance(data, dict) or "particles" not in data or "coefficients" not in data:
            raise ValueError("state JSON needs 'particles' and 'coefficients'")
        n = data["particles"]
        if not isinstance(n, int) or n < 1:
            raise ValueError("'particles' must be a positive integer")
        coeffs = data["coefficients"]
        if len(coeffs) != 4 ** n:
            raise ValueError(f"expected {4 ** n} coefficients for {n} particles, got {len(coeffs)}")
        vals = []
        for k, c in enumerate(coeffs):
            if not (isinstance(c, (list, tuple)) and len(c) == 2):
                raise ValueError(f"coefficient {k} must be a [re, im] pair")
            vals.append(complex(float(c[0]), float(c[1])))
        return cls(np.array(vals), particles=n)


def basis_state(indices) -> StateTensor:
    indices = list(indices)
    if not indices:
        raise ValueError("basis_state needs at least one index")
    t = np.zeros((4,) * len(indices), dtype=complex)
    t[tuple(indices)] = 1.0
    return StateTensor(t)


def product_state(spinors) -> StateTensor:
    spinors = [np.asarray(s, dtype=complex) for s in spinors]
    if not spinors:
        raise ValueError("product_state needs at least one spinor")
    return StateTensor(reduce(np.multiply.outer, spinors))


def random_spinor(rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(4) + 1j * rng.standard_normal(4)


def random_state(n: int, seed) -> StateTensor:
    """Normalized complex Gaussian state; `seed` may be an int or a Generator."""
    if not 1 <= n <= MAX_RANDOM_PARTICLES:
        raise ValueError(f"random_state supports 1..{MAX_RANDOM_PARTICLES} particles")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    t = rng.standard_normal((4,) * n) + 1j * rng.standard_normal((4,) * n)
    return StateTensor(t / np.linalg.norm(t))


def random_product_state(n: int, seed) -> StateTensor:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return product_state([random_spinor(rng) for _ in range(n)])


def apply_local(state: StateTensor, particle: int, M) -> StateTensor:
    """psi'_{..j..} = sum_m M_{jm} psi_{..m..} on the given particle's axis."""
    n = state.particles
    if not 0 <= particle < n:
        raise IndexError(f"particle {particle} out of range for {n} particles")
    M = np.asarray(M, dtype=complex)
    t = np.tensordot(M, state.tensor, axes=([1], [particle]))
    return StateTensor(np.moveaxis(t, 0, particle))


def apply_each(state: StateTensor, mats) -> StateTensor:
    """Apply one matrix per particle."""
    for a, M in enumerate(mats):
        state = apply_local(state, a, M)
    return state


def project_local(state: StateTensor, particle: int, kind: str) -> StateTensor:
    return apply_local(state, particle, projector(kind))


def swap_particles(state: StateTensor, a: int, b: int) -> StateTensor:
    return StateTensor(np.swapaxes(state.tensor, a, b))


def _combo(terms, norm) -> StateTensor:
    """Sum of coefficient * basis product, divided by norm."""
    n = len(terms[0][1])
    t = np.zeros((4,) * n, dtype=complex)
    for coef, idx in terms:
        t[tuple(idx)] += coef
    return StateTensor(t / norm)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    state: StateTensor
    description: str
    expected: tuple = field(default_factory=tuple)  # (invariant name, |value|, note)


_S2, _S3, _S5 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(5.0)

_TWO_ZERO = ("I1", "I2", "I2A", "I2B")
_TWO_TWO = ("R1", "R2", "R3", "R4", "R5", "R6", "T1", "T2", "N1N4mN2N3")
_TWO_Q = ("Q1", "Q2", "Q3", "Q4")
_THREE_ONE = tuple(f"{f}{k}" for f in "XZBD" for k in range(1, 9))


def _table(nonzero: dict, zero_names) -> tuple:
    rows = [(k, v, "stated nonzero") for k, v in nonzero.items()]
    rows += [(k, 0.0, "stated zero") for k in zero_names if k not in nonzero]
    return tuple(rows)


def _two(nonzero, extra_zero=()):
    return _table(nonzero, _TWO_ZERO + _TWO_TWO + _TWO_Q + tuple(extra_zero))


_CATALOG_SPECS = {
    "epr2": ([(1, (0, 1)), (-1j, (1, 0))], _S2, "(phi0 phi1 - i phi1 phi0)/sqrt2",
             _two({"I1": 0.5, "R1": 0.25, "R4": 0.25, "T1": 0.5})),
    "i2_state": ([(1, (1, 3)), (-1, (2, 0))], _S2, "(phi1 phi3 - phi2 phi0)/sqrt2",
                 _two({"I2": 0.5, "R3": 0.25, "R6": 0.25, "T1": 0.5})),
    "i2a_state": ([(1, (0, 0)), (-1, (1, 3))], _S2, "(phi0 phi0 - phi1 phi3)/sqrt2",
                  _two({"I2A": 0.5, "R1": 0.25, "R6": 0.25, "T1": 0.5})),
    "i2b_state": ([(1, (1, 1)), (-1, (2, 0))], _S2, "(phi1 phi1 - phi2 phi0)/sqrt2",
                  _two({"I2B": 0.5, "R3": 0.25, "R4": 0.25, "T1": 0.5})),
    "xccx": ([(1, (0, 1)), (1, (1, 3))], _S2, "(phi0 phi1 + phi1 phi3)/sqrt2",
             _two({"R1": 0.25, "T1": 0.5})),
    "xccx2": ([(1, (0, 2)), (1, (3, 0))], _S2, "(phi0 phi2 + phi3 phi0)/sqrt2",
              _two({"R3": 0.25, "T1": 0.5})),
    "xccx3": ([(1, (0, 0)), (1, (2, 1))], _S2, "(phi0 phi0 + phi2 phi1)/sqrt2",
              _two({"R4": 0.25, "T1": 0.5})),
    "xccx4": ([(1, (0, 3)), (1, (2, 0))], _S2, "(phi0 phi3 + phi2 phi0)/sqrt2",
              _two({"R6": 0.25, "T1": 0.5})),
    "xccx5": ([(1, (0, 2)), (1, (2, 0))], _S2, "(phi0 phi2 + phi2 phi0)/sqrt2",
              _two({"T1": 0.5, "N1N4mN2N3": 1.0})),
    "xccx6": ([(1, (0, 2)), (1 + 1j, (2, 0))], _S3, "(phi0 phi2 + (1+i) phi2 phi0)/sqrt3",
              _two({"T1": 4 / 3, "T2": 4 / 3, "N1N4mN2N3": 6 / 9})),
    "utoy": ([(1, (0, 2)), (1, (1, 0)), (1, (2, 2))], _S3, "(phi0 phi2 + phi1 phi0 + phi2 phi2)/sqrt3",
             _two({"R1": 1 / 9, "R2": 1 / 9, "R3": 1 / 9})),
    "utoya": ([(1, (2, 0)), (1, (0, 1)), (1, (2, 2))], _S3, "(phi2 phi0 + phi0 phi1 + phi2 phi2)/sqrt3",
              _two({"R4": 1 / 9, "R5": 1 / 9, "R6": 1 / 9})),
    "toi": ([(1, (0, 2)), (1, (1, 1)), (-1, (2, 2)), (1, (3, 0)), (1, (3, 1))], _S5,
            "(phi0 phi2 + phi1 phi1 - phi2 phi2 + phi3 phi0 + phi3 phi1)/sqrt5",
            _two({"R1": 1 / 25, "R2": 1 / 25, "R3": 1 / 25, "R4": 1 / 25, "T1": 2 / 25,
                  "Q2": 1 / 25, "Q4": 1 / 25})),
    "toi2": ([(1, (2, 0)), (1, (1, 1)), (-1, (2, 2)), (1, (0, 3)), (1, (1, 3))], _S5,
             "(phi2 phi0 + phi1 phi1 - phi2 phi2 + phi0 phi3 + phi1 phi3)/sqrt5",
             _two({"R1": 1 / 25, "R4": 1 / 25, "R5": 1 / 25, "R6": 1 / 25, "T1": 2 / 25,
                   "Q2": 1 / 25, "Q3": 1 / 25})),
    "req1": ([(1, (0, 0, 1)), (1, (0, 1, 0)), (1, (1, 0, 0)), (1, (0, 0, 0))], 2.0,
             "(phi0 phi0 phi1 + phi0 phi1 phi0 + phi1 phi0 phi0 + phi0 phi0 phi0)/2",
             _table({"B1": 1 / 8, "Z1": 1 / 8, "D1": 1 / 8, "W1": 1 / 16}, _THREE_ONE)),
    "req2": ([(1, (0, 0, 3)), (1, (0, 3, 0)), (1, (3, 0, 0)), (1, (2, 2, 2))], 2.0,
             "(phi0 phi0 phi3 + phi0 phi3 phi0 + phi3 phi0 phi0 + phi2 phi2 phi2)/2",
             _table({"B8": 1 / 8, "Z8": 1 / 8, "D8": 1 / 8}, _THREE_ONE + ("W1",))),
    "req3": ([(1, (0, 2, 0)), (1, (0, 0, 1)), (1, (0, 3, 2)), (1, (1, 0, 2))], 2.0,
             "(phi0 phi2 phi0 + phi0 phi0 phi1 + phi0 phi3 phi2 + phi1 phi0 phi2)/2",
             _table({"B6": 1 / 8, "Z6": 1 / 8, "D6": 1 / 8}, _THREE_ONE + ("W1",))),
    "w3": ([(1, (0, 0, 1)), (1, (0, 1, 0)), (1, (1, 0, 0))], _S3,
           "(phi0 phi0 phi1 + phi0 phi1 phi0 + phi1 phi0 phi0)/sqrt3",
           _table({"W1": 4 / 27}, _THREE_ONE)),
}

CATALOG_NAMES = tuple(_CATALOG_SPECS)


def catalog_state(name: str) -> CatalogEntry:
    try:
        terms, norm, desc, expected = _CATALOG_SPECS[name]
    except KeyError:
        raise KeyError(f"unknown catalog state {name!r}; available: {', '.join(CATALOG_NAMES)}") from None
    return CatalogEntry(name, _combo(terms, norm), desc, expected)


def load_state(path) -> StateTensor:
    with open(path) as fh:
        return StateTensor.from_json(json.load(fh))


def shipped_state_path(name: str):
    """Path of a JSON fixture shipped in the package data directory."""
    return resources.files("dirac_invariants") / "data" / f"{name}.json"
