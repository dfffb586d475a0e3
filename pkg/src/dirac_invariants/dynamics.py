"""Time evolution of momentum-eigenstate spinors and the dynamical laws of the forms.

With psi(t, x) = chi(t) exp(i p.x) the Dirac equation with minimal coupling
and a pseudoscalar term becomes the linear system

    d chi/dt = G(t) chi,
    G = -i q A0 - i sum_k (p_k + q A_k) g0 gk - i m g0 + g phi g0 g5,

obtained by multiplying the equation from the left with g0. Every term of G is
anti-Hermitian, so the norm of chi is conserved.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import forms
from .gamma import C, C5, G0, G05, G5, GAMMA, IDENTITY
from .states import StateTensor

_G0GK = tuple(G0 @ GAMMA[k] for k in (1, 2, 3))


def _as_function(v) -> Callable[[float], float]:
    if callable(v):
        return v
    c = float(v)
    return lambda t: c


@dataclass(frozen=True)
class EvolutionParams:
    """Momentum, couplings, potentials (constants or callables of t) and the time grid."""

    p: tuple = (0.0, 0.0, 0.0)
    m: float = 1.0
    q: float = 0.0
    g: float = 0.0
    A0: object = 0.0
    A: tuple = (0.0, 0.0, 0.0)
    phi: object = 0.0
    t0: float = 0.0
    t1: float = 1.0
    dt: float = 1e-3

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if self.m < 0:
            raise ValueError("mass must be nonnegative")
        if self.t1 < self.t0:
            raise ValueError("t1 must not precede t0")
        if len(self.p) != 3 or len(self.A) != 3:
            raise ValueError("p and A need three components")

    @property
    def static(self) -> bool:
        """True when no potential depends on time."""
        return not any(callable(v) for v in (self.A0, self.phi, *self.A))

    @property
    def steps(self) -> int:
        return int(round((self.t1 - self.t0) / self.dt))

    def potentials(self, t: float):
        """(A0, (A1, A2, A3), phi) at time t."""
        a0 = _as_function(self.A0)(t)
        a = tuple(_as_function(x)(t) for x in self.A)
        ph = _as_function(self.phi)(t)
        vals = (a0, *a, ph)
        if not all(np.isfinite(vals)):
            raise ValueError(f"potentials not finite at t={t}")
        return a0, a, ph


def generator(params: EvolutionParams, t: float) -> np.ndarray:
    a0, a, ph = params.potentials(t)
    G = -1j * params.q * a0 * IDENTITY - 1j * params.m * G0 + params.g * ph * G05
    for k in range(3):
        G = G - 1j * (params.p[k] + params.q * a[k]) * _G0GK[k]
    return G


def step_matrix(params: EvolutionParams, t: float, dt: float | None = None) -> np.ndarray:
    """One classical RK4 step of the linear system as a 4x4 propagator."""
    h = params.dt if dt is None else dt
    g1 = generator(params, t)
    g2 = generator(params, t + h / 2)
    g3 = generator(params, t + h)
    k1 = g1
    k2 = g2 @ (IDENTITY + h / 2 * k1)
    k3 = g2 @ (IDENTITY + h / 2 * k2)
    k4 = g3 @ (IDENTITY + h * k3)
    return IDENTITY + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    spinors: np.ndarray = field(repr=False)  # shape (len(times), 4)

    def __post_init__(self):
        if len(self.times) != len(self.spinors):
            raise ValueError("times and spinors differ in length")

    def at(self, k: int) -> np.ndarray:
        return self.spinors[k]


def _grid(params: EvolutionParams) -> np.ndarray:
    return params.t0 + params.dt * np.arange(params.steps + 1)


def _steps(params: EvolutionParams, times):
    if params.static:
        U = step_matrix(params, params.t0)
        return (U for _ in times[1:])
    return (step_matrix(params, t) for t in times[:-1])


def evolve(chi0, params: EvolutionParams) -> Trajectory:
    """Integrate d chi/dt = G chi with RK4 on the params grid."""
    chi = np.asarray(chi0, dtype=complex)
    if chi.shape != (4,):
        raise ValueError("chi0 must be a 4-component spinor")
    times = _grid(params)
    out = np.empty((len(times), 4), dtype=complex)
    out[0] = chi
    for k, U in enumerate(_steps(params, times), start=1):
        chi = U @ chi
        out[k] = chi
    if not np.all(np.isfinite(out)):
        raise FloatingPointError("trajectory diverged")
    return Trajectory(times, out)


def evolve_local(state: StateTensor, particle: int, params: EvolutionParams):
    """Evolve one particle of a state; returns (times, list of StateTensor)."""
    times = _grid(params)
    t = state.tensor
    out = [state]
    for U in _steps(params, times):
        t = np.moveaxis(np.tensordot(U, t, axes=([1], [particle])), 0, particle)
        out.append(StateTensor(t))
    return times, out


def rest_solution(j: int, params: EvolutionParams, t) -> np.ndarray:
    """Closed-form free solution at rest: basis spinor j times exp(-+ i m t)."""
    sign = -1.0 if j in (0, 1) else 1.0
    e = np.zeros(4, dtype=complex)
    e[j] = 1.0
    return np.exp(sign * 1j * params.m * np.asarray(t))[..., None] * e


# ---------------------------------------------------------------- forms

def form_rhs(kind: str, psi, phi, params: EvolutionParams, t: float) -> complex:
    """Right-hand side of d/dt form(psi, phi) for momentum eigenstates of params.p.

    Spatial derivatives act as i p_k on psi and phi, and as -i p_k on psi^dagger.
    """
    a0, a, ph = params.potentials(t)
    q, m, g = params.q, params.m, params.g
    p = params.p
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    gk = GAMMA[1:]
    if kind == "C":
        val = 2 * psi @ C @ ((-1j * q * a0) * phi - 1j * m * (G0 @ phi))
        for k in range(3):
            M = C @ G0 @ gk[k]
            val += (1j * p[k] * psi) @ M @ phi - psi @ M @ (1j * p[k] * phi)
        return complex(val)
    if kind == "C5":
        val = 2 * psi @ C5 @ ((-1j * q * a0) * phi + g * ph * (G05 @ phi))
        for k in range(3):
            M = C5 @ G0 @ gk[k]
            val += (1j * p[k] * psi) @ M @ phi - psi @ M @ (1j * p[k] * phi)
        return complex(val)
    pd = psi.conj()
    if kind == "G0":
        inner = sum(-1j * q * a[k] * gk[k] for k in range(3)) + g * ph * G5
        val = 2 * pd @ inner @ phi
        for k in range(3):
            val += (-1j * p[k] * pd) @ gk[k] @ phi - pd @ gk[k] @ (1j * p[k] * phi)
        return complex(val)
    if kind == "G05":
        inner = sum(1j * q * a[k] * gk[k] for k in range(3)) + 1j * m * IDENTITY
        val = 2 * pd @ G5 @ inner @ phi
        for k in range(3):
            M = G5 @ gk[k]
            val += pd @ M @ (1j * p[k] * phi) - (-1j * p[k] * pd) @ M @ phi
        return complex(val)
    raise ValueError(f"unknown form kind {kind!r}")


def _centered(values: np.ndarray, dt: float) -> np.ndarray:
    return (values[2:] - values[:-2]) / (2 * dt)


def form_evolution_residual(kind: str, psi_traj: Trajectory, phi_traj: Trajectory,
                            params: EvolutionParams) -> float:
    """max |centered d/dt form - rhs| over interior grid points, relative to max |rhs|, |form|."""
    if len(psi_traj.times) != len(phi_traj.times) or not np.allclose(psi_traj.times, phi_traj.times):
        raise ValueError("trajectories must share a time grid")
    if len(psi_traj.times) < 3:
        raise ValueError("need at least three grid points")
    times = psi_traj.times
    dt = times[1] - times[0]
    vals = np.array([forms.form(kind, a, b) for a, b in zip(psi_traj.spinors, phi_traj.spinors)])
    rhs = np.array([form_rhs(kind, a, b, params, t)
                    for a, b, t in zip(psi_traj.spinors[1:-1], phi_traj.spinors[1:-1], times[1:-1])])
    scale = max(float(np.max(np.abs(rhs))), float(np.max(np.abs(vals))), 1e-300)
    return float(np.max(np.abs(_centered(vals, dt) - rhs)) / scale)


# ---------------------------------------------------------------- I1 / I2

def _tr(P, left, right):
    return complex(np.trace(P.T @ left @ P @ right))


def invariant_rhs(name: str, P: np.ndarray, params: EvolutionParams, t: float,
                  printed: bool = False) -> complex:
    """d/dt Tr[P^T X P X] under evolution of the row (first particle) index.

    With printed=True the pseudoscalar term of the I2 law is taken as
    g phi Tr[P^T g0 C5 P C5]; by default the term that follows from the
    generator, -2 g phi Tr[P^T g0 C P C5], is used.
    """
    a0, _, ph = params.potentials(t)
    q, m, g = params.q, params.m, params.g
    p = params.p
    X = {"I1": C, "I2": C5}.get(name)
    if X is None:
        raise ValueError("only I1 and I2 have recorded evolution laws")
    val = -2j * q * a0 * _tr(P, X, X)
    if name == "I1":
        val += -2j * m * _tr(P, G0 @ C, C)
    elif printed:
        val += g * ph * _tr(P, G0 @ C5, C5)
    else:
        val += -2 * g * ph * _tr(P, G0 @ C, C5)
    for k in range(3):
        M = X @ G0 @ GAMMA[k + 1]
        dP = 1j * p[k] * P
        val += -complex(np.trace(P.T @ M @ dP @ X)) + complex(np.trace(dP.T @ M @ P @ X))
    return val


@dataclass(frozen=True)
class InvariantEvolutionReport:
    name: str
    times: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    rhs_residual: float
    modulus_spread: float
    phase_slope: float
    constancy_expected: bool

    @property
    def constant_modulus(self) -> bool:
        return self.modulus_spread < 1e-6


def invariant_evolution_check(name: str, state0: StateTensor, params: EvolutionParams,
                              printed: bool = False) -> InvariantEvolutionReport:
    """Evolve Alice's particle and compare d/dt Tr[P^T X P X] with its law."""
    if state0.particles != 2:
        raise ValueError("invariant evolution needs a two-particle state")
    X = {"I1": C, "I2": C5}.get(name)
    if X is None:
        raise ValueError("only I1 and I2 have recorded evolution laws")
    times, traj = evolve_local(state0, 0, params)
    mats = [s.tensor for s in traj]
    vals = np.array([_tr(P, X, X) for P in mats])
    rhs = np.array([invariant_rhs(name, P, params, t, printed) for P, t in zip(mats[1:-1], times[1:-1])])
    scale = max(float(np.max(np.abs(rhs))), float(np.max(np.abs(vals))), 1e-300)
    resid = float(np.max(np.abs(_centered(vals, params.dt) - rhs)) / scale)
    mod = np.abs(vals)
    spread = float((mod.max() - mod.min()) / max(mod.max(), 1e-300))
    phase = np.unwrap(np.angle(vals))
    slope = float(np.polyfit(times, phase, 1)[0]) if mod.min() > 0 else float("nan")
    expected = (name == "I1" and params.m == 0) or (name == "I2" and params.g == 0)
    return InvariantEvolutionReport(name, times, vals, resid, spread, slope, expected)


def trace_identity_residuals(n_samples: int = 20, seed: int = 0) -> dict[str, float]:
    """Max |Tr[P^T X g0 gk P X]| for X = C and C g5 over random complex P."""
    rng = np.random.default_rng(seed)
    worst = {"C": 0.0, "C5": 0.0}
    for _ in range(n_samples):
        P = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        scale = np.linalg.norm(P) ** 2
        for key, X in (("C", C), ("C5", C5)):
            for k in range(3):
                v = abs(_tr(P, X @ G0 @ GAMMA[k + 1], X)) / scale
                worst[key] = max(worst[key], v)
    return worst


def order_ratio(chi0, params: EvolutionParams, t_end: float | None = None) -> float:
    """Error ratio between steps dt and dt/2 against the exact propagator (constant G)."""
    from scipy.linalg import expm

    t_end = params.t1 if t_end is None else t_end
    G = generator(params, params.t0)
    exact = expm(G * (t_end - params.t0)) @ np.asarray(chi0, dtype=complex)
    errs = []
    for dt in (params.dt, params.dt / 2):
        p = EvolutionParams(params.p, params.m, params.q, params.g, params.A0, params.A,
                            params.phi, params.t0, t_end, dt)
        errs.append(np.linalg.norm(evolve(chi0, p).spinors[-1] - exact))
    return float(errs[0] / errs[1])
