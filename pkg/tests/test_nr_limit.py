import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from dirac_invariants.nr_limit import kempe_J, s2, wootters_concurrence


def random_qubits(rng, n):
    q = rng.normal(size=(2,) * n) + 1j * rng.normal(size=(2,) * n)
    return q / np.linalg.norm(q)


def random_unitary(rng):
    h = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return expm(h - h.conj().T)


def random_special_unitary(rng):
    u = random_unitary(rng)
    return u / np.sqrt(np.linalg.det(u))


def local(q, mats):
    for a, u in enumerate(mats):
        q = np.moveaxis(np.tensordot(u, q, axes=([1], [a])), 0, a)
    return q


def test_concurrence_examples():
    bell = np.array([[1, 0], [0, 1]]) / np.sqrt(2)
    assert abs(abs(wootters_concurrence(bell)) - 0.5) < 1e-15
    assert wootters_concurrence(np.array([[0, 1], [0, 0]])) == 0
    rng = np.random.default_rng(0)
    a, b = rng.normal(size=2), rng.normal(size=2)
    assert abs(wootters_concurrence(np.outer(a, b))) < 1e-15


def test_wrong_sizes():
    with pytest.raises(ValueError):
        wootters_concurrence(np.zeros(8))
    with pytest.raises(ValueError):
        kempe_J(1, np.zeros(4))
    with pytest.raises(ValueError):
        kempe_J(6, np.zeros(8))
    with pytest.raises(ValueError):
        s2(np.zeros(4))


def test_j1_is_norm_squared(rng):
    assert np.isclose(kempe_J(1, random_qubits(rng, 3)), 1)


def test_ghz_symmetric_j():
    g = np.zeros((2, 2, 2))
    g[0, 0, 0] = g[1, 1, 1] = 1 / np.sqrt(2)
    j2, j3, j4 = (kempe_J(k, g) for k in (2, 3, 4))
    assert np.isclose(j2, j3) and np.isclose(j3, j4)


def test_j2_to_j4_are_single_particle_purities(rng):
    # independent oracle: Tr rho^2 of each one-qubit reduced state
    q = random_qubits(rng, 3)
    for k, a in ((2, 0), (3, 1), (4, 2)):
        m = np.moveaxis(q, a, 0).reshape(2, 4)
        rho = m @ m.conj().T
        assert np.isclose(kempe_J(k, q), np.trace(rho @ rho))


def test_j5_matches_loop_nest(rng):
    p = random_qubits(rng, 3)
    c = p.conj()
    total = 0
    for i, j, k, m, n, o, q, r, v in itertools.product(range(2), repeat=9):
        total += p[i, j, k] * c[i, m, n] * p[o, m, q] * c[r, j, q] * p[r, v, n] * c[o, v, k]
    assert np.isclose(kempe_J(5, p), total, atol=1e-13)


def test_s2_vanishes_on_products(rng):
    for _ in range(20):
        a, b, c = (rng.normal(size=2) + 1j * rng.normal(size=2) for _ in range(3))
        assert abs(s2(np.multiply.outer(np.multiply.outer(a, b), c))) < 1e-12


def test_s2_on_two_term_state():
    # DERIVED: substituting psi_000 = a, psi_111 = b into the expansion
    a, b = 0.6 + 0.2j, 0.3 - 0.5j
    g = np.zeros((2, 2, 2), dtype=complex)
    g[0, 0, 0], g[1, 1, 1] = a, b
    assert np.isclose(s2(g), a * b * (abs(a) ** 2 - abs(b) ** 2))


@settings(max_examples=20, deadline=None)
@given(st.floats(0.1, 3), st.floats(-np.pi, np.pi))
def test_bidegree_scaling(r, theta):
    lam = r * np.exp(1j * theta)
    rng = np.random.default_rng(4)
    q2, q3 = random_qubits(rng, 2), random_qubits(rng, 3)
    assert np.isclose(wootters_concurrence(lam * q2), lam ** 2 * wootters_concurrence(q2))
    assert np.isclose(s2(lam * q3), lam ** 3 * np.conj(lam) * s2(q3))
    assert np.isclose(kempe_J(1, lam * q3), r ** 2 * kempe_J(1, q3))
    for k in (2, 3, 4):
        assert np.isclose(kempe_J(k, lam * q3), r ** 4 * kempe_J(k, q3))
    assert np.isclose(kempe_J(5, lam * q3), r ** 6 * kempe_J(5, q3))


def test_local_unitary_invariance(rng):
    for _ in range(5):
        q = random_qubits(rng, 3)
        moved = local(q, [random_unitary(rng) for _ in range(3)])
        for k in range(1, 6):
            a, b = kempe_J(k, q), kempe_J(k, moved)
            assert abs(a - b) < 1e-10 * abs(a)
        moved = local(q, [random_special_unitary(rng) for _ in range(3)])
        assert np.isclose(abs(s2(moved)), abs(s2(q)), rtol=1e-10)
        q2 = random_qubits(rng, 2)
        m2 = local(q2, [random_special_unitary(rng) for _ in range(2)])
        assert np.isclose(abs(wootters_concurrence(m2)), abs(wootters_concurrence(q2)), rtol=1e-10)
