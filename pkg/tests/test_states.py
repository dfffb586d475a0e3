import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_invariants import catalog, lorentz
from dirac_invariants.gamma import G0, IDENTITY, basis_spinor
from dirac_invariants.states import (CATALOG_NAMES, StateTensor, apply_local, basis_state, catalog_state,
                                     load_state, product_state, project_local, random_product_state,
                                     random_state, shipped_state_path, swap_particles)


def test_basis_state():
    s = basis_state([0, 1])
    assert s[0, 1] == 1
    assert s.norm() == 1
    assert basis_state([1, 0, 0])[1, 0, 0] == 1
    with pytest.raises(ValueError):
        basis_state([])


def test_flat_order_last_index_fastest():
    assert np.flatnonzero(basis_state([0, 1]).flat).tolist() == [1]
    assert np.flatnonzero(basis_state([1, 0]).flat).tolist() == [4]


def test_product_state_is_outer_product():
    s = product_state([basis_spinor(0), basis_spinor(1)])
    assert np.array_equal(s.tensor, basis_state([0, 1]).tensor)


def test_product_states_kill_indicators():
    for seed in range(5):
        s = random_product_state(2, seed)
        assert abs(catalog.eval_named("I1", s)) < 1e-10 * s.norm() ** 2
        for name in catalog.FAMILIES["2p-(2,2)"]:
            if catalog.get(name).scope.kind == catalog.ALL_PARTICLES:
                assert abs(catalog.eval_named(name, s)) < 1e-10 * s.norm() ** 4, name


def test_random_state_determinism_and_norm():
    a, b = random_state(3, 5), random_state(3, 5)
    assert np.array_equal(a.flat, b.flat)
    assert abs(a.norm() - 1) < 1e-12
    c = random_state(3, 6)
    assert abs(np.vdot(a.flat, c.flat)) < 1
    with pytest.raises(ValueError):
        random_state(5, 0)


def test_apply_local():
    s = random_state(2, 0)
    assert np.allclose(apply_local(s, 0, IDENTITY).flat, s.flat)
    b = basis_state([0, 1])
    assert np.allclose(apply_local(b, 0, G0).flat, b.flat)
    S = lorentz.random_proper_orthochronous(1)
    back = apply_local(apply_local(s, 1, S), 1, np.linalg.inv(S))
    assert np.allclose(back.flat, s.flat, atol=1e-10)
    with pytest.raises(IndexError):
        apply_local(s, 2, IDENTITY)


def test_apply_local_acts_on_the_chosen_axis(rng):
    M = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    s = random_state(3, 1)
    expected = np.einsum("jm,imk->ijk", M, s.tensor)
    assert np.allclose(apply_local(s, 1, M).tensor, expected)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2), st.integers(0, 2))
def test_local_operations_on_different_particles_commute(seed, a, b):
    rng = np.random.default_rng(seed)
    s = random_state(3, seed)
    M = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    N = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    if a == b:
        return
    one = apply_local(apply_local(s, a, M), b, N)
    two = apply_local(apply_local(s, b, N), a, M)
    assert np.allclose(one.flat, two.flat, atol=1e-12)


def test_project_local():
    assert np.allclose(project_local(basis_state([2, 3]), 0, "Pplus").flat, 0)
    b = basis_state([0, 1])
    assert np.allclose(project_local(b, 0, "Pplus").flat, b.flat)
    s = random_state(2, 3)
    assert np.allclose(project_local(project_local(s, 0, "PL"), 0, "PR").flat, 0)


def test_swap_particles():
    assert np.array_equal(swap_particles(basis_state([0, 2]), 0, 1).tensor, basis_state([2, 0]).tensor)


def test_catalog_states():
    for name in CATALOG_NAMES:
        e = catalog_state(name)
        assert abs(e.state.norm() - 1) < 1e-12
        assert e.expected
    epr = catalog_state("epr2").state
    assert np.isclose(epr[0, 1], 1 / np.sqrt(2)) and np.isclose(epr[1, 0], -1j / np.sqrt(2))
    assert dict((k, v) for k, v, _ in catalog_state("epr2").expected)["I1"] == 0.5
    assert dict((k, v) for k, v, _ in catalog_state("w3").expected)["W1"] == pytest.approx(4 / 27)
    xccx = dict((k, v) for k, v, _ in catalog_state("xccx").expected)
    assert xccx["R1"] == 0.25 and xccx["T1"] == 0.5


def test_unknown_catalog_state_lists_names():
    with pytest.raises(KeyError, match="epr2"):
        catalog_state("nope")


def test_json_round_trip(tmp_path):
    s = random_state(2, 9)
    p = tmp_path / "s.json"
    p.write_text(json.dumps(s.to_json()))
    assert np.array_equal(load_state(p).flat, s.flat)


def test_json_rejects_bad_shapes():
    with pytest.raises(ValueError):
        StateTensor.from_json({"particles": 2, "coefficients": [[1, 0]] * 15})
    with pytest.raises(ValueError):
        StateTensor.from_json({"coefficients": []})


def test_shipped_fixtures_match_catalog():
    for name in CATALOG_NAMES:
        s = load_state(shipped_state_path(name))
        assert np.allclose(s.flat, catalog_state(name).state.flat, atol=1e-15)


def test_states_are_immutable():
    s = random_state(1, 0)
    with pytest.raises(ValueError):
        s.tensor[0] = 1
