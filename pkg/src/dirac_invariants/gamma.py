"""Dirac-representation gamma matrices and the matrices built from them.

Metric signature is (+,-,-,-). All matrices are read-only complex128 arrays.
"""
from __future__ import annotations

import numpy as np

ATOL = 1e-12


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)
SIGMA = (
    _frozen([[0, 1], [1, 0]]),
    _frozen([[0, -1j], [1j, 0]]),
    _frozen([[1, 0], [0, -1]]),
)

IDENTITY = _frozen(np.eye(4))
METRIC = _frozen(np.diag([1.0, -1.0, -1.0, -1.0]))

GAMMA = (
    _frozen(np.block([[I2, Z2], [Z2, -I2]])),
    *(_frozen(np.block([[Z2, s], [-s, Z2]])) for s in SIGMA),
)

G0 = GAMMA[0]
G5 = _frozen(1j * GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3])
C = _frozen(1j * GAMMA[1] @ GAMMA[3])
C5 = _frozen(C @ G5)
G05 = _frozen(G0 @ G5)

_SPECIAL = {"C": C, "C5": C5, "G5": G5, "G0": G0, "G05": G05}

_PROJECTORS = {
    "Pplus": _frozen(0.5 * (IDENTITY + G0)),
    "Pminus": _frozen(0.5 * (IDENTITY - G0)),
    "PL": _frozen(0.5 * (IDENTITY - G5)),
    "PR": _frozen(0.5 * (IDENTITY + G5)),
}


def gamma(mu: int) -> np.ndarray:
    """gamma^mu with an upper index."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be 0..3, got {mu!r}")
    return GAMMA[mu]


def special(name: str) -> np.ndarray:
    """One of C, C5 (= C g5), G5, G0, G05 (= g0 g5)."""
    try:
        return _SPECIAL[name]
    except KeyError:
        raise ValueError(f"unknown matrix {name!r}; expected one of {sorted(_SPECIAL)}") from None


def projector(kind: str) -> np.ndarray:
    """Energy (Pplus, Pminus) or chirality (PL, PR) projector."""
    try:
        return _PROJECTORS[kind]
    except KeyError:
        raise ValueError(f"unknown projector {kind!r}; expected one of {sorted(_PROJECTORS)}") from None


def basis_spinor(j: int) -> np.ndarray:
    """phi_j, the j-th standard basis spinor."""
    if j not in (0, 1, 2, 3):
        raise ValueError(f"basis index must be 0..3, got {j!r}")
    v = np.zeros(4, dtype=complex)
    v[j] = 1.0
    return v


def clifford_residual() -> float:
    """max |{g^mu, g^nu} - 2 g^{mu nu} I| over all mu, nu."""
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            r = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu] - 2 * METRIC[mu, nu] * IDENTITY
            worst = max(worst, float(np.abs(r).max()))
    return worst


def identity_residuals() -> dict[str, float]:
    """Residuals of the defining relations, keyed by a short label."""
    res = {"clifford": clifford_residual()}
    res["g0 g g0 = g^dagger"] = max(
        float(np.abs(G0 @ g @ G0 - g.conj().T).max()) for g in GAMMA)
    res["C g C = g^T"] = max(float(np.abs(C @ g @ C - g.T).max()) for g in GAMMA)
    res["g5 anticommutes"] = max(float(np.abs(G5 @ g + g @ G5).max()) for g in GAMMA)
    res["g5 hermitian, symmetric, involutive"] = max(
        float(np.abs(G5 - G5.conj().T).max()),
        float(np.abs(G5 - G5.T).max()),
        float(np.abs(G5 @ G5 - IDENTITY).max()),
    )
    res["C hermitian involution"] = max(
        float(np.abs(C - C.conj().T).max()), float(np.abs(C @ C - IDENTITY).max()))
    res["C antisymmetric"] = float(np.abs(C + C.T).max())
    res["C5 antisymmetric"] = float(np.abs(C5 + C5.T).max())
    res["g0 real symmetric"] = max(float(np.abs(G0.imag).max()), float(np.abs(G0 - G0.T).max()))
    res["g05 real antisymmetric"] = max(
        float(np.abs(G05.imag).max()), float(np.abs(G05 + G05.T).max()))
    kills = []
    for p in ("Pplus", "Pminus"):
        P = _PROJECTORS[p]
        kills += [P @ C5 @ P, P @ G05 @ P]
    for p in ("PL", "PR"):
        P = _PROJECTORS[p]
        kills += [P @ G0 @ P, P @ G05 @ P]
    res["projector kill rules"] = max(float(np.abs(k).max()) for k in kills)
    proj = []
    for P in _PROJECTORS.values():
        proj += [P @ P - P, P - P.conj().T]
    proj.append(_PROJECTORS["Pplus"] + _PROJECTORS["Pminus"] - IDENTITY)
    proj.append(_PROJECTORS["PL"] + _PROJECTORS["PR"] - IDENTITY)
    res["projectors idempotent, hermitian, complete"] = max(float(np.abs(k).max()) for k in proj)
    return res
