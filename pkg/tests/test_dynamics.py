import numpy as np
import pytest
from scipy.linalg import expm

from dirac_invariants import dynamics, forms
from dirac_invariants.dynamics import (EvolutionParams, evolve, evolve_local, form_evolution_residual,
                                       generator, invariant_evolution_check, order_ratio, rest_solution,
                                       trace_identity_residuals)
from dirac_invariants.gamma import G0, G5, GAMMA, basis_spinor
from dirac_invariants.states import random_state

P = (0.3, -0.2, 0.5)


def spinor(rng):
    return rng.normal(size=4) + 1j * rng.normal(size=4)


def test_params_validation():
    with pytest.raises(ValueError):
        EvolutionParams(dt=0)
    with pytest.raises(ValueError):
        EvolutionParams(m=-1)
    with pytest.raises(ValueError):
        EvolutionParams(p=(1, 2))
    assert EvolutionParams().static
    assert not EvolutionParams(A0=np.sin).static


def test_generator_solves_dirac_equation():
    # sum g^mu d_mu psi = (-i q sum g^mu A_mu - i m + g g5 phi) psi, with d_k -> i p_k
    params = EvolutionParams(p=P, m=0.7, q=0.9, g=0.4, A0=0.5, A=(0.1, 0.2, -0.3), phi=0.3)
    G = generator(params, 0.0)
    a0, a, ph = params.potentials(0.0)
    for chi in np.eye(4):
        lhs = GAMMA[0] @ G @ chi + sum(1j * params.p[k] * GAMMA[k + 1] @ chi for k in range(3))
        rhs = (-1j * params.q * (a0 * GAMMA[0] + sum(a[k] * GAMMA[k + 1] for k in range(3)))
               - 1j * params.m * np.eye(4) + params.g * ph * G5) @ chi
        assert np.allclose(lhs, rhs, atol=1e-12)


def test_generator_is_anti_hermitian():
    params = EvolutionParams(p=P, m=0.7, q=0.9, g=0.4, A0=0.5, A=(0.1, 0.2, -0.3), phi=0.3)
    G = generator(params, 0.0)
    assert np.allclose(G + G.conj().T, 0)


@pytest.mark.parametrize("j", range(4))
def test_rest_frame_closed_forms(j):
    params = EvolutionParams(m=1.0, t1=10.0, dt=1e-3)
    tr = evolve(basis_spinor(j), params)
    assert np.max(np.abs(tr.spinors - rest_solution(j, params, tr.times))) < 1e-8


def test_rest_frame_signs():
    params = EvolutionParams(m=1.3)
    assert np.isclose(rest_solution(0, params, 1.0)[0], np.exp(-1.3j))
    assert np.isclose(rest_solution(2, params, 1.0)[2], np.exp(1.3j))


def test_free_evolution_preserves_norm(rng):
    params = EvolutionParams(p=P, m=0.8, t1=5.0)
    tr = evolve(spinor(rng), params)
    norms = np.linalg.norm(tr.spinors, axis=1)
    assert abs(norms[-1] / norms[0] - 1) < 1e-8


def test_evolution_matches_matrix_exponential(rng):
    params = EvolutionParams(p=P, m=0.7, q=0.9, g=0.4, A0=0.5, phi=0.3, t1=2.0)
    chi = spinor(rng)
    exact = expm(generator(params, 0.0) * 2.0) @ chi
    assert np.allclose(evolve(chi, params).spinors[-1], exact, atol=1e-10)


def test_bad_initial_spinor():
    with pytest.raises(ValueError):
        evolve(np.ones(3), EvolutionParams())


@pytest.mark.parametrize("kind, params", [
    ("C", EvolutionParams(p=P, m=0.0, q=0.8, g=0.4, A0=0.5, phi=0.7, t1=2.0)),
    ("C5", EvolutionParams(p=P, m=0.9, q=0.8, g=0.0, A0=0.5, t1=2.0)),
])
def test_u1_phase_law(kind, params, rng):
    a, b = evolve(spinor(rng), params), evolve(spinor(rng), params)
    vals = np.array([forms.form(kind, x, y) for x, y in zip(a.spinors, b.spinors)])
    expected = np.exp(-2j * params.q * params.A0 * a.times) * vals[0]
    assert np.max(np.abs(vals - expected)) < 1e-7 * abs(vals[0])
    slope = np.polyfit(a.times, np.unwrap(np.angle(vals)), 1)[0]
    assert abs(slope + 2 * params.q * params.A0) < 1e-4


GENERIC = EvolutionParams(p=P, m=0.7, q=0.9, g=0.4, A0=lambda t: 0.5 + 0.2 * np.sin(t),
                          A=(0.1, lambda t: 0.2 * np.cos(t), 0.0), phi=lambda t: 0.3 * np.cos(2 * t), t1=2.0)


@pytest.mark.parametrize("kind", forms.FORM_KINDS)
def test_form_evolution_laws(kind, rng):
    a, b = evolve(spinor(rng), GENERIC), evolve(spinor(rng), GENERIC)
    assert form_evolution_residual(kind, a, b, GENERIC) < 1e-5


def test_form_law_for_massless_c_is_pure_phase(rng):
    params = EvolutionParams(p=P, m=0.0, q=0.8, g=0.4, A0=0.5, phi=0.7, t1=1.0)
    psi, phi = spinor(rng), spinor(rng)
    rhs = dynamics.form_rhs("C", psi, phi, params, 0.0)
    assert np.isclose(rhs, -2j * 0.8 * 0.5 * forms.form("C", psi, phi))


def test_grid_mismatch(rng):
    a = evolve(spinor(rng), EvolutionParams(t1=1.0))
    b = evolve(spinor(rng), EvolutionParams(t1=2.0))
    with pytest.raises(ValueError):
        form_evolution_residual("C", a, b, EvolutionParams())


def test_evolve_local_matches_single_spinor(rng):
    params = EvolutionParams(p=P, m=0.7, t1=0.1)
    chi, phi = spinor(rng), spinor(rng)
    from dirac_invariants.states import product_state
    times, traj = evolve_local(product_state([chi, phi]), 0, params)
    single = evolve(chi, params)
    assert np.allclose(traj[-1].tensor, np.outer(single.spinors[-1], phi))


def test_i1_constant_modulus_when_massless():
    s = random_state(2, 11)
    params = EvolutionParams(p=P, m=0.0, q=0.8, g=0.4, A0=0.5, t1=5.0)
    rep = invariant_evolution_check("I1", s, params)
    assert rep.constancy_expected
    assert rep.modulus_spread < 1e-6
    assert abs(rep.phase_slope + 2 * 0.8 * 0.5) < 1e-4


def test_i2_constant_modulus_without_pseudoscalar():
    s = random_state(2, 11)
    params = EvolutionParams(p=P, m=0.9, q=0.8, g=0.0, A0=0.5, t1=5.0)
    rep = invariant_evolution_check("I2", s, params)
    assert rep.modulus_spread < 1e-6
    assert abs(rep.phase_slope + 2 * 0.8 * 0.5) < 1e-4


@pytest.mark.parametrize("name", ["I1", "I2"])
def test_invariant_evolution_law_generic(name):
    rep = invariant_evolution_check(name, random_state(2, 3), GENERIC)
    assert rep.rhs_residual < 1e-5
    assert not rep.constancy_expected


def test_printed_i2_law():
    rep = invariant_evolution_check("I2", random_state(2, 3), GENERIC, printed=True)
    assert rep.rhs_residual < 1e-5


def test_printed_i2_pseudoscalar_term_is_identically_zero(rng):
    from dirac_invariants.gamma import C5
    for _ in range(5):
        P_ = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert abs(np.trace(P_.T @ G0 @ C5 @ P_ @ C5)) < 1e-12


def test_invariant_check_needs_two_particles():
    with pytest.raises(ValueError):
        invariant_evolution_check("I1", random_state(3, 0), EvolutionParams())
    with pytest.raises(ValueError):
        invariant_evolution_check("T1", random_state(2, 0), EvolutionParams())


def test_trace_identities():
    res = trace_identity_residuals()
    assert max(res.values()) < 1e-12


def test_rk4_order(rng):
    params = EvolutionParams(p=P, m=0.7, q=0.9, g=0.4, A0=0.5, phi=0.3, t1=1.0, dt=0.05)
    assert abs(order_ratio(spinor(rng), params) - 16) < 1.5
