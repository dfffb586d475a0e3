import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_invariants import catalog, lorentz
from dirac_invariants.contraction import (ArityError, IndexCountError, ParityError, ParticleMismatchError,
                                          PatternError, PlacementError, SyntaxPatternError, UnknownAtomError,
                                          evaluate, evaluate_naive, parse, plan)
from dirac_invariants.gamma import C
from dirac_invariants.states import (apply_each, apply_local, basis_state, catalog_state, random_product_state,
                                     random_state)

I1_TEXT = "C[j m] Psi[j k] Psi[m n] C[k n]"
V1_TEXT = "g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]"
B21_TEXT = catalog._TWO_TWO_THREE["B21_1"][0]


def test_parse_i1_pattern():
    p = parse(I1_TEXT)
    assert p.particles == 2
    assert p.bidegree == (2, 0)
    assert len(p.pairings) == 2
    assert {q.sandwich for q in p.pairings} == {"C"}


def test_i1_pattern_is_the_trace_up_to_sign(rng):
    p = parse(I1_TEXT)
    for _ in range(5):
        s = random_state(2, rng)
        P = s.tensor
        # C is antisymmetric, so the literal index order gives Tr[P^T C P C^T]
        assert np.isclose(evaluate(p, s), -np.trace(P.T @ C @ P @ C))


def test_parse_v1_pattern():
    p = parse(V1_TEXT)
    assert p.particles == 3
    assert p.bidegree == (1, 1)
    assert evaluate_naive(p, basis_state([0, 0, 0])) == pytest.approx(1)
    assert evaluate(p, basis_state([0, 0, 0])) == pytest.approx(1)


def test_row_is_first_bracket_position():
    p = parse("C[a b] Psi[a] Psi[b]")
    (pr,) = p.pairings
    assert pr.row == (0, 0) and pr.col == (1, 0)
    s = random_state(1, 0)
    # literal index order: swapping the bracket flips the sign of C's entries
    q = parse("C[b a] Psi[a] Psi[b]")
    assert np.isclose(evaluate(p, s), -evaluate(q, s))


@pytest.mark.parametrize("text, err, letter", [
    ("C[j m] Psi[j k] Psi[m n] Foo[k n]", UnknownAtomError, None),
    ("C[j m] Psi[j k] Psi[m n] C[k k]", PlacementError, "k"),
    ("C[j m] Psi[j k] Psi[m n] C[k z]", IndexCountError, None),
    ("C[j m] C[j m] Psi[k n] Psi[k n]", PlacementError, None),
    ("C[j m] Psi[j k] Psi[m] C[k n]", ArityError, None),
    ("C[i j] Psi[i k] Psi*[j n] g0[k n]", ParityError, "i"),
    ("g0[i j] Psi[i k] Psi[j n] C[k n]", ParityError, "i"),
    ("C[j m Psi[j k] Psi[m n] C[k n]", SyntaxPatternError, None),
])
def test_parser_diagnostics(text, err, letter):
    with pytest.raises(err) as info:
        parse(text)
    assert isinstance(info.value, PatternError)
    if letter is not None:
        assert info.value.letter == letter
        assert letter in str(info.value)


def test_slot_mismatch_rejected():
    with pytest.raises(PatternError):
        parse("C[j n] Psi[j k] Psi[m n] C[k m]")


def test_particle_mismatch():
    with pytest.raises(ParticleMismatchError):
        evaluate(parse(I1_TEXT), random_state(3, 0))
    with pytest.raises(ParticleMismatchError):
        evaluate_naive(parse(I1_TEXT), random_state(3, 0))


def test_to_text_round_trip():
    for text in (I1_TEXT, V1_TEXT, B21_TEXT, catalog.W_TEXT):
        p = parse(text)
        assert parse(p.to_text()) == p


def test_homogeneous_two_zero_patterns_vanish_on_three_particles():
    p = parse("C[i l] C[j m] C[k n] Psi[i j k] Psi[l m n]")
    for seed in range(5):
        assert abs(evaluate_naive(p, random_state(3, seed))) < 1e-12


def test_b21_vanishes_on_product_states():
    p = parse(B21_TEXT)
    for name in ("req1",):
        assert abs(evaluate(p, catalog_state(name).state)) > 0
    for seed in range(5):
        s = random_product_state(3, seed)
        assert abs(evaluate_naive(p, s)) < 1e-10 * s.norm() ** 4


def test_v1_plan_cost():
    ep = plan(parse(V1_TEXT))
    # frozen: four pairwise merges, well below the naive 4^6 enumeration
    assert len(ep.steps) == 4
    assert ep.flops == 784
    assert ep.naive_flops == 4 ** 6
    assert ep.flops < ep.naive_flops
    assert len(ep.describe()) == 4


def test_w_plan_cheaper_than_naive():
    ep = plan(parse(catalog.W_TEXT))
    assert ep.naive_flops == 4 ** 18
    assert ep.flops < ep.naive_flops


def test_planner_matches_naive_on_named_patterns():
    seen = set()
    for name in catalog.list_names():
        n = catalog.get(name).particles
        for p in catalog.all_patterns(name):
            if p in seen:
                continue
            seen.add(p)
            for seed in range(3):
                s = random_state(n, seed)
                a, b = evaluate(p, s), evaluate_naive(p, s)
                assert abs(a - b) <= 1e-10 * max(abs(b), 1e-12), (name, p.to_text())


def test_w1_on_w_state():
    v = evaluate(parse(catalog.W_TEXT), catalog_state("w3").state)
    assert abs(abs(v) - 4 / 27) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_local_lorentz_invariance_of_patterns(seed):
    rng = np.random.default_rng(seed)
    for text in (I1_TEXT, V1_TEXT, B21_TEXT):
        p = parse(text)
        s = random_state(p.particles, rng)
        mats = [lorentz.random_proper_orthochronous(rng) for _ in range(p.particles)]
        a, b = evaluate(p, s), evaluate(p, apply_each(s, mats))
        assert abs(a - b) <= 1e-8 * max(abs(a), 1e-10)


def test_partial_observer_nullity():
    # Z21_1 has bilinear pairings only on A and B
    p = parse(catalog._TWO_TWO_THREE["Z21_1"][0])
    assert p.bilinear_observers() == frozenset({0, 1})
    rng = np.random.default_rng(0)
    pair = random_state(2, 1).tensor
    phi = rng.normal(size=4) + 1j * rng.normal(size=4)
    # C factored out: allowed to be nonzero
    s_c = np.multiply.outer(pair, phi)
    from dirac_invariants.states import StateTensor
    assert abs(evaluate(p, StateTensor(s_c))) > 1e-3
    # A factored out: must vanish
    s_a = np.multiply.outer(phi, pair)
    assert abs(evaluate(p, StateTensor(s_a))) < 1e-10


def test_parity_sign_per_observer():
    from dirac_invariants.lorentz import discrete
    P = discrete("P")
    for name in ("X2", "X8", "B5", "V2", "V1"):
        (p,) = catalog.all_patterns(name)
        s = random_state(3, 4)
        base = evaluate(p, s)
        for a in range(3):
            moved = evaluate(p, apply_local(s, a, P))
            sign = -1 if a in p.odd_parity_observers() else 1
            assert np.isclose(moved, sign * base, rtol=1e-10, atol=1e-14)
