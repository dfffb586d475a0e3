import numpy as np
import pytest

from dirac_invariants.gamma import (C, C5, G0, G05, G5, GAMMA, IDENTITY, METRIC, SIGMA, basis_spinor,
                                    clifford_residual, gamma, identity_residuals, projector, special)


def test_gamma0_is_diagonal():
    assert np.array_equal(gamma(0), np.diag([1, 1, -1, -1]))


def test_spatial_gammas_block_form():
    for k in range(1, 4):
        g = gamma(k)
        assert np.array_equal(g[:2, 2:], SIGMA[k - 1])
        assert np.array_equal(g[2:, :2], -SIGMA[k - 1])
        assert np.array_equal(g[:2, :2], np.zeros((2, 2)))


def test_clifford_relations():
    for mu in range(4):
        for nu in range(4):
            anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
            assert np.allclose(anti, 2 * METRIC[mu, nu] * IDENTITY, atol=1e-14)
    assert clifford_residual() < 1e-12


def test_gamma5_anticommutes_and_squares_to_one():
    for g in GAMMA:
        assert np.allclose(G5 @ g + g @ G5, 0)
    assert np.allclose(G5 @ G5, IDENTITY)


def test_charge_matrix_block_diagonal():
    s2 = SIGMA[1]
    expected = np.block([[-s2, np.zeros((2, 2))], [np.zeros((2, 2)), -s2]])
    assert np.allclose(C, expected)
    assert np.allclose(C @ C, IDENTITY)


def test_bilinear_matrices_antisymmetric():
    assert np.allclose(C.T, -C)
    assert np.allclose(C5.T, -C5)
    assert np.allclose(G05.conj().T, -G05)
    assert np.allclose(G0.conj().T, G0)


def test_conjugation_identities():
    for g in GAMMA:
        assert np.allclose(C @ g @ C, g.T)
        assert np.allclose(G0 @ g @ G0, g.conj().T)


def test_identity_residuals_all_small():
    res = identity_residuals()
    assert res
    assert max(res.values()) < 1e-12


def test_projectors():
    pp, pm = projector("Pplus"), projector("Pminus")
    assert np.allclose(pp, np.diag([1, 1, 0, 0]))
    assert np.allclose(pp + pm, IDENTITY)
    assert np.allclose(pp @ pm, 0)
    pl, pr = projector("PL"), projector("PR")
    assert np.allclose(pl @ pr, 0)
    assert np.allclose(pl @ pl, pl)
    assert np.allclose(pl + pr, IDENTITY)


def test_chiral_projectors_kill_g0_sandwich():
    for ch in ("PL", "PR"):
        P = projector(ch)
        assert np.allclose(P @ G0 @ P, 0)
        assert np.allclose(P @ G05 @ P, 0)
    for e in ("Pplus", "Pminus"):
        P = projector(e)
        assert np.allclose(P @ C5 @ P, 0)
        assert np.allclose(P @ G05 @ P, 0)


def test_basis_spinor():
    assert np.array_equal(basis_spinor(2), [0, 0, 1, 0])
    with pytest.raises(ValueError):
        basis_spinor(4)


def test_unknown_names_rejected():
    with pytest.raises((KeyError, ValueError)):
        special("nope")
    with pytest.raises((KeyError, ValueError)):
        projector("Pup")
    with pytest.raises((IndexError, ValueError)):
        gamma(4)


def test_constants_are_read_only():
    with pytest.raises(ValueError):
        C[0, 0] = 1.0
