"""The four Lorentz invariant forms on pairs of spinors."""
from __future__ import annotations

import numpy as np

from .gamma import C, C5, G0, G05

_BILINEAR = {"C": C, "C5": C5}
_SESQUILINEAR = {"G0": G0, "G05": G05}


def _spinor(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape != (4,):
        raise ValueError(f"spinor must have 4 components, got shape {v.shape}")
    return v


def bilinear(kind: str, psi, phi) -> complex:
    """psi^T M phi with M = C or C g5."""
    if kind not in _BILINEAR:
        raise ValueError(f"bilinear kind must be C or C5, got {kind!r}")
    return complex(_spinor(psi) @ _BILINEAR[kind] @ _spinor(phi))


def sesquilinear(kind: str, psi, phi) -> complex:
    """psi^dagger M phi with M = g0 or g0 g5."""
    if kind not in _SESQUILINEAR:
        raise ValueError(f"sesquilinear kind must be G0 or G05, got {kind!r}")
    return complex(_spinor(psi).conj() @ _SESQUILINEAR[kind] @ _spinor(phi))


def form(kind: str, psi, phi) -> complex:
    """Any of the four forms by name."""
    if kind in _BILINEAR:
        return bilinear(kind, psi, phi)
    return sesquilinear(kind, psi, phi)


FORM_KINDS = ("C", "C5", "G0", "G05")
