import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_invariants import analysis, catalog
from dirac_invariants.analysis import (analyze, frame_sweep, is_affinely_balanced, is_balanced, numeric_rank,
                                       numeric_rank_report, weight_vectors)
from dirac_invariants.states import StateTensor, basis_state, catalog_state


def weights(name):
    return set(weight_vectors(catalog_state(name).state).weights)


def test_weight_vectors_examples():
    assert weights("w3") == {(-1, -1, 1), (-1, 1, -1), (1, -1, -1)}
    assert weights("xccx") == {(-1, 1), (1, 1)}
    assert weight_vectors(basis_state([0, 0])).weights == ((-1, -1),)


def test_weight_vectors_order_and_epsilon():
    t = np.zeros((4, 4), dtype=complex)
    t[3, 0], t[0, 2], t[1, 1] = 1, 1, 1e-12
    ws = weight_vectors(StateTensor(t))
    assert ws.support == ((0, 2), (3, 0))
    assert len(weight_vectors(StateTensor(t), support_epsilon=0).support) == 3
    with pytest.raises(ValueError):
        weight_vectors(StateTensor(np.zeros((4, 4))))
    with pytest.raises(ValueError):
        weight_vectors(StateTensor(t), support_epsilon=-1)


def test_is_balanced_examples():
    assert is_balanced([(-1, 1), (1, -1)])
    assert not is_balanced(weight_vectors(catalog_state("xccx").state))
    assert not is_balanced(weight_vectors(catalog_state("req1").state))


def test_is_affinely_balanced_examples():
    assert is_affinely_balanced(weight_vectors(catalog_state("req1").state))
    assert not is_affinely_balanced(weight_vectors(catalog_state("xccx").state))
    assert is_affinely_balanced([(-1, 1), (1, -1)])


def test_req1_affine_coefficients():
    # coefficients 1, 1, 1, -1 give zero; dividing by their sum makes them affine
    w = np.array([(-1, -1, 1), (-1, 1, -1), (1, -1, -1), (-1, -1, -1)])
    lam = np.array([1, 1, 1, -1])
    assert np.array_equal(lam @ w, [0, 0, 0])
    assert lam.sum() != 0
    assert set(map(tuple, w)) == weights("req1")


STATED = {
    "xccx": (False, False), "xccx2": (False, False), "xccx3": (False, False), "xccx4": (False, False),
    "utoy": (False, False), "utoya": (False, False), "w3": (False, False), "req1": (False, True),
}


@pytest.mark.parametrize("name", sorted(STATED))
def test_stated_verdicts(name):
    w = analyze(catalog_state(name).state)
    assert (w.balanced, w.affinely_balanced) == STATED[name]


def test_other_catalog_verdicts():
    # DERIVED: exact verdicts for the remaining catalog states, frozen
    for name in ("epr2", "i2_state", "i2a_state", "i2b_state", "toi", "toi2"):
        w = analyze(catalog_state(name).state)
        assert (w.balanced, w.affinely_balanced) == (True, True), name
    for name in ("req2", "req3"):
        w = analyze(catalog_state(name).state)
        assert (w.balanced, w.affinely_balanced) == (False, True), name
    for name in ("xccx5", "xccx6"):
        w = analyze(catalog_state(name).state)
        assert (w.balanced, w.affinely_balanced) == (False, False), name


@pytest.mark.parametrize("name", [n for n, v in STATED.items() if not v[1]])
def test_unbalanced_states_kill_unequal_bidegrees(name):
    s = catalog_state(name).state
    names = [n for n in catalog.list_names(particles=s.particles, extras=True)
             if catalog.get(n).bidegree[0] != catalog.get(n).bidegree[1]]
    vals = catalog.eval_many(names, s)
    assert max(abs(v) for v in vals.values()) < 1e-10


def test_req1_mixed_invariants_survive():
    s = catalog_state("req1").state
    for name in ("I1", "I2") if s.particles == 2 else ():
        assert abs(catalog.eval_named(name, s)) < 1e-10
    for name in ("B1", "Z1", "D1", "W1"):
        assert abs(catalog.eval_named(name, s)) > 1e-3


sign_vectors = st.lists(st.tuples(st.sampled_from([-1, 1]), st.sampled_from([-1, 1]),
                                  st.sampled_from([-1, 1])), min_size=1, max_size=8)


@settings(max_examples=100, deadline=None)
@given(sign_vectors, st.randoms())
def test_balancedness_symmetries(w, rnd):
    b = is_balanced(w)
    shuffled = list(w)
    rnd.shuffle(shuffled)
    assert is_balanced(shuffled) == b
    assert is_balanced([tuple(-x for x in v) for v in w]) == b
    if b:
        assert is_affinely_balanced(w)


@settings(max_examples=100, deadline=None)
@given(sign_vectors)
def test_balancedness_matches_float_lp(w):
    from scipy.optimize import linprog
    a = np.array(w, dtype=float).T
    a_eq = np.vstack([a, np.ones(len(w))])
    b_eq = np.concatenate([np.zeros(a.shape[0]), [1.0]])
    res = linprog(np.zeros(len(w)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    assert is_balanced(w) == (res.status == 0)


def test_frame_sweep_is_deterministic():
    s = catalog_state("epr2").state
    a, b = frame_sweep(s, frames=5, seed=1), frame_sweep(s, frames=5, seed=1)
    assert a == b
    assert a.frames == 5


def test_frame_sweep_is_only_a_semi_decision():
    # generic rotated frames spread the support, so xccx looks balanced there
    # even though the given frame is not
    sweep = frame_sweep(catalog_state("xccx").state, frames=10)
    assert not analyze(catalog_state("xccx").state).balanced
    assert sweep.balanced_frames == 10
    assert not sweep.unbalanced_frame_found


FAMILY_RANKS = {"2p-(2,2)": 27, "2p-(3,1)": 20, "3p-(2,2)-selected": 21, "3p-(3,1)": 20}


@pytest.mark.parametrize("family", sorted(FAMILY_RANKS))
def test_stated_family_ranks(family):
    assert numeric_rank(catalog.FAMILIES[family]) == FAMILY_RANKS[family]


def test_rank_with_parity_even_z7():
    # DERIVED: replacing Z7 by Z7s gives 20 independent members
    assert numeric_rank(catalog.THREE_ONE_WITH_Z7S) == 20


def test_rank_gap_is_clear():
    r = numeric_rank_report(catalog.FAMILIES["2p-(3,1)"])
    assert r.rank == 20
    assert r.largest_discarded < 1e-12 * r.singular_values[0]
    assert r.smallest_retained > 1e-4 * r.singular_values[0]


def test_duplicate_name_keeps_rank():
    names = list(catalog.FAMILIES["2p-(3,1)"])
    assert numeric_rank(names + names[:1]) == numeric_rank(names)


def test_rank_errors():
    with pytest.raises(ValueError):
        numeric_rank(["I1", "V1"])
    with pytest.raises(ValueError):
        numeric_rank(["I1", "I2"], n_states=3)


def test_threads_do_not_change_values(monkeypatch):
    names = catalog.FAMILIES["2p-(3,1)"][:6]
    one = analysis.value_matrix(names, 12, seed=2)
    monkeypatch.setenv("SPINOR_INV_THREADS", "4")
    assert analysis.thread_count() == 4
    assert np.array_equal(analysis.value_matrix(names, 12, seed=2), one)
