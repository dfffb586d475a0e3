"""Spin-1/2 invariants used as targets for the rest-frame reductions.

Qubit tensors are plain complex arrays of shape (2,)*n with the same index
order as state tensors (first particle first).
"""
from __future__ import annotations

import numpy as np

from . import expansions


def qubit_tensor(t, n: int) -> np.ndarray:
    a = np.asarray(t, dtype=complex)
    if a.size != 2 ** n:
        raise ValueError(f"expected {2 ** n} coefficients for {n} qubits, got {a.size}")
    return a.reshape((2,) * n)


def wootters_concurrence(t) -> complex:
    """psi_00 psi_11 - psi_01 psi_10 for two qubits."""
    p = qubit_tensor(t, 2)
    return complex(p[0, 0] * p[1, 1] - p[0, 1] * p[1, 0])


def kempe_J(k: int, t) -> complex:
    """J1..J5 for three qubits; J1 is the squared norm, J5 the Kempe invariant."""
    p = qubit_tensor(t, 3)
    j1 = float(np.vdot(p, p).real)
    if k == 1:
        return complex(j1)
    if k == 2:
        return complex(expansions.J2mJ1sq(p) + j1 ** 2)
    if k == 3:
        return complex(expansions.J3mJ1sq(p) + j1 ** 2)
    if k == 4:
        return complex(expansions.J4mJ1sq(p) + j1 ** 2)
    if k == 5:
        c = p.conj()
        return complex(np.einsum("ijk,imn,omq,rjq,rvn,ovk->", p, c, p, c, p, c))
    raise ValueError(f"k must be in 1..5, got {k}")


def s2(t) -> complex:
    """The degree (3,1) three-qubit invariant in its written-out form."""
    return complex(expansions.s2(qubit_tensor(t, 3)))
