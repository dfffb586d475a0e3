"""Spinor representation of the Lorentz group and the discrete maps."""
from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .gamma import C, C5, G0, G05, G5, GAMMA, IDENTITY

# order of the six independent coefficients omega_{rho sigma}
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
MAX_BOOST = 3.0


def generator(rho: int, sigma: int) -> np.ndarray:
    """S^{rho sigma} = [g^rho, g^sigma] / 4."""
    if rho not in range(4) or sigma not in range(4):
        raise ValueError("generator indices must be 0..3")
    if rho == sigma:
        raise ValueError("generator needs rho != sigma")
    a, b = GAMMA[rho], GAMMA[sigma]
    return 0.25 * (a @ b - b @ a)


def algebra_element(omega) -> np.ndarray:
    """(1/2) sum_{rho,sigma} omega_{rho sigma} S^{rho sigma} for antisymmetric omega.

    `omega` holds the six coefficients in PAIRS order; each independent pair
    appears twice in the full double sum, which cancels the 1/2.
    """
    omega = np.asarray(omega, dtype=float)
    if omega.shape != (6,) or not np.all(np.isfinite(omega)):
        raise ValueError("omega must be 6 finite reals")
    out = np.zeros((4, 4), dtype=complex)
    for w, (r, s) in zip(omega, PAIRS):
        out += w * generator(r, s)
    return out


def exp_element(omega) -> np.ndarray:
    """S(Lambda) = exp of the algebra element."""
    return expm(algebra_element(omega))


def random_omega(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    if not 0 < scale <= MAX_BOOST:
        raise ValueError(f"scale must lie in (0, {MAX_BOOST}]")
    return rng.uniform(-scale, scale, size=6)


def random_proper_orthochronous(seed, scale: float = 1.0) -> np.ndarray:
    """Deterministic random S(Lambda); `seed` may be an int or a Generator."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return exp_element(random_omega(rng, scale))


def random_rotation(seed) -> np.ndarray:
    """Random spinor rotation (only the spatial generators S^{12}, S^{13}, S^{23})."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    omega = np.zeros(6)
    omega[3:] = rng.uniform(-np.pi, np.pi, size=3)
    return exp_element(omega)


_DISCRETE = {
    "P": G0,
    "CT": -1j * G05,
    "CPT": -1j * G5,
}


def discrete(name: str) -> np.ndarray:
    try:
        return _DISCRETE[name].copy()
    except KeyError:
        raise ValueError(f"unknown discrete map {name!r}; expected P, CT or CPT") from None


_ANTIUNITARY = {
    "T": C,
    "Cconj": 1j * GAMMA[2],
    "CP": 1j * C5,
}


def apply_antiunitary(name: str, psi) -> np.ndarray:
    """Complex-conjugate psi, then apply the matrix of the named map."""
    try:
        m = _ANTIUNITARY[name]
    except KeyError:
        raise ValueError(f"unknown antiunitary map {name!r}; expected T, Cconj or CP") from None
    return m @ np.conj(np.asarray(psi, dtype=complex))


def form_preservation_residuals(S: np.ndarray) -> dict[str, float]:
    """How far S is from preserving each of the four forms."""
    return {
        "C": float(np.abs(S.T @ C @ S - C).max()),
        "C5": float(np.abs(S.T @ C5 @ S - C5).max()),
        "G0": float(np.abs(S.conj().T @ G0 @ S - G0).max()),
        "G05": float(np.abs(S.conj().T @ G05 @ S - G05).max()),
    }


def _g(*idx):
    m = IDENTITY
    for k in idx:
        m = m @ (G5 if k == 5 else GAMMA[k])
    return m


# Lie algebras of the invariance groups of each form, as (coefficient, gamma indices)
# with 5 standing for gamma^5 and () for the identity.
FORM_ALGEBRAS = {
    "C": [(1, (5, 0)), (1j, (5, 1)), (1j, (5, 2)), (1j, (5, 3)), (1j, (0, 1)), (1j, (0, 2)),
          (1j, (0, 3)), (1, (1, 2)), (1, (1, 3)), (1, (2, 3)),
          (1j, (5, 0)), (1, (5, 1)), (1, (5, 2)), (1, (5, 3)), (1, (0, 1)), (1, (0, 2)),
          (1, (0, 3)), (1j, (1, 2)), (1j, (1, 3)), (1j, (2, 3))],
    "C5": [(1j, (0,)), (1, (1,)), (1, (2,)), (1, (3,)), (1j, (0, 1)), (1j, (0, 2)), (1j, (0, 3)),
           (1, (1, 2)), (1, (1, 3)), (1, (2, 3)),
           (1, (0,)), (1j, (1,)), (1j, (2,)), (1j, (3,)), (1, (0, 1)), (1, (0, 2)), (1, (0, 3)),
           (1j, (1, 2)), (1j, (1, 3)), (1j, (2, 3))],
    "G0": [(1j, (0,)), (1j, (5, 1)), (1j, (5, 2)), (1j, (5, 3)), (1, (1, 2)), (1, (1, 3)),
           (1, (2, 3)), (1j, ()),
           (1j, (1,)), (1j, (2,)), (1j, (3,)), (1j, (5, 0)), (1, (0, 1)), (1, (0, 2)),
           (1, (0, 3)), (1, (5,))],
    "G05": [(1, (1,)), (1, (2,)), (1, (3,)), (1, (1, 2)), (1, (1, 3)), (1, (2, 3)), (1, (5, 0)),
            (1j, ()),
            (1, (0,)), (1, (0, 1)), (1, (0, 2)), (1, (0, 3)), (1, (5, 1)), (1, (5, 2)),
            (1, (5, 3)), (1, (5,))],
}
SHARED_ALGEBRA = [(1, (1, 2)), (1, (1, 3)), (1, (2, 3)), (1, (0, 1)), (1, (0, 2)), (1, (0, 3))]

_FORM_MATRIX = {"C": C, "C5": C5, "G0": G0, "G05": G05}


def algebra_matrices(spec) -> list[np.ndarray]:
    return [coef * _g(*idx) for coef, idx in spec]


def annihilation_residual(form: str, g: np.ndarray) -> float:
    """|g^T M + M g| for bilinear forms, |g^dagger M + M g| for sesquilinear ones."""
    M = _FORM_MATRIX[form]
    lhs = g.T if form in ("C", "C5") else g.conj().T
    return float(np.abs(lhs @ M + M @ g).max())


def algebra_rank(mats) -> int:
    """Real dimension of the span of the matrices."""
    rows = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats])
    return int(np.linalg.matrix_rank(rows, tol=1e-10))
