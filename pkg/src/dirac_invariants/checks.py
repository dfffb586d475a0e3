"""Property suites run by `dirac-inv check` and the acceptance script.

Each suite returns a list of Check records holding the measured value, the
threshold it is compared against and the verdict.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import numpy as np

from . import analysis, catalog, contraction, dynamics, forms, lorentz, reductions
from .gamma import basis_spinor, identity_residuals
from .states import CATALOG_NAMES, apply_each, catalog_state, random_state


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    value: float
    threshold: float
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["value"] = float(self.value)
        d["threshold"] = float(self.threshold)
        return d


def _below(suite, name, value, threshold, detail=""):
    value = float(value)
    return Check(suite, name, value, threshold, bool(value < threshold), detail)


def _equal(suite, name, value, expected, detail=""):
    return Check(suite, name, float(value), float(expected), bool(value == expected), detail)


# ------------------------------------------------------------------ algebra

ALGEBRA_DIMENSIONS = {"C": 20, "C5": 20, "G0": 16, "G05": 16}


def algebra_suite(seed: int = 0) -> list[Check]:
    out = [_below("algebra", k, v, 1e-12) for k, v in identity_residuals().items()]
    for form, spec in lorentz.FORM_ALGEBRAS.items():
        mats = lorentz.algebra_matrices(spec)
        worst = max(lorentz.annihilation_residual(form, g) for g in mats)
        out.append(_below("algebra", f"{form} algebra annihilates form", worst, 1e-12))
        out.append(_equal("algebra", f"{form} algebra real dimension", lorentz.algebra_rank(mats),
                          ALGEBRA_DIMENSIONS[form]))
    shared = lorentz.algebra_matrices(lorentz.SHARED_ALGEBRA)
    worst = max(lorentz.annihilation_residual(f, g) for f in forms.FORM_KINDS for g in shared)
    out.append(_below("algebra", "shared algebra annihilates all forms", worst, 1e-12))
    for key, v in dynamics.trace_identity_residuals(seed=seed).items():
        out.append(_below("algebra", f"trace identity {key} g0 gk", v, 1e-12))
    return out


# --------------------------------------------------------------- invariance

def invariance_suite(seed: int = 0, n_form_samples: int = 100, n_states: int = 20,
                     n_transforms: int = 5) -> list[Check]:
    rng = np.random.default_rng(seed)
    out = []
    worst = {k: 0.0 for k in forms.FORM_KINDS}
    for _ in range(n_form_samples):
        S = lorentz.random_proper_orthochronous(rng)
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        phi = rng.normal(size=4) + 1j * rng.normal(size=4)
        for k in forms.FORM_KINDS:
            a, b = forms.form(k, psi, phi), forms.form(k, S @ psi, S @ phi)
            worst[k] = max(worst[k], abs(a - b) / max(abs(a), 1e-12 * np.linalg.norm(psi) * np.linalg.norm(phi)))
    out += [_below("invariance", f"form {k}", v, 1e-8) for k, v in worst.items()]

    for n in (2, 3):
        names = catalog.list_names(particles=n, extras=True)
        worst = dict.fromkeys(names, 0.0)
        for j in range(n_states):
            s = random_state(n, seed * 7919 + j)
            base = catalog.eval_many(names, s)
            for _ in range(n_transforms):
                mats = [lorentz.random_proper_orthochronous(rng) for _ in range(n)]
                moved = catalog.eval_many(names, apply_each(s, mats))
                for name in names:
                    k, l = catalog.get(name).bidegree
                    floor = 1e-12 * s.norm() ** (k + l)
                    r = abs(moved[name] - base[name]) / max(abs(base[name]), floor)
                    worst[name] = max(worst[name], r)
        out += [_below("invariance", name, v, 1e-8) for name, v in worst.items()]
    return out


# ----------------------------------------------------------------- examples

def examples_suite(seed: int = 0) -> list[Check]:
    out = []
    for state_name in CATALOG_NAMES:
        entry = catalog_state(state_name)
        for inv, expected, note in entry.expected:
            got = abs(catalog.eval_named(inv, entry.state))
            out.append(Check("examples", f"{state_name} |{inv}|", got, expected,
                             bool(abs(got - expected) < 1e-9), note))
    return out


# ----------------------------------------------------------------- oracles

ORACLE_EXPANSION_NAMES = ("I1", "I2", "I2A", "I2B", "R1", "R2", "R3", "R4", "R5", "R6",
                          "T1", "T2", "Q1", "Q2", "Q3", "Q4", "N1N4mN2N3")


def oracles_suite(seed: int = 0, n_states: int = 20, n_expansion_states: int = 50) -> list[Check]:
    out = []
    seen = set()
    for name in catalog.list_names(extras=True):
        n = catalog.get(name).particles
        for p in catalog.all_patterns(name):
            key = p.to_text()
            if key in seen:
                continue
            seen.add(key)
            worst = 0.0
            for j in range(n_states):
                s = random_state(n, seed * 104729 + j)
                a, b = contraction.evaluate(p, s), contraction.evaluate_naive(p, s)
                floor = 1e-12 * s.norm() ** len(p.factors)
                worst = max(worst, abs(a - b) / max(abs(b), floor))
            out.append(_below("oracles", f"planner vs naive: {name}: {key}", worst, 1e-10))
    for name in ORACLE_EXPANSION_NAMES:
        worst = 0.0
        for j in range(n_expansion_states):
            s = random_state(2, seed * 15485863 + j)
            a, b = catalog.eval_named(name, s), catalog.expansion_oracle(name, s)
            k, l = catalog.get(name).bidegree
            worst = max(worst, abs(a - b) / max(abs(a), 1e-12 * s.norm() ** (k + l)))
        out.append(_below("oracles", f"expansion vs engine: {name}", worst, 1e-10))
    return out


# --------------------------------------------------------------- reductions

# Constants allowed after fitting: the stated reduction holds "up to a sign"
# for these names, exactly otherwise.
SIGN_FREE = {"I1", "R1", "R4", "I1.N1", "Z1", "D1", "B1", "K1", "W1"}
STATED_CONSTANT = {"T1": 2.0}


def _constant_ok(name, c):
    if name in SIGN_FREE:
        return abs(abs(c) - 1) < 1e-8 and abs(c.imag) < 1e-8
    return abs(c - STATED_CONSTANT.get(name, 1.0)) < 1e-8


def reductions_suite(seed: int = 0, n_states: int = 30, weyl_states: int = 5) -> list[Check]:
    out = []
    for name, (label, _) in reductions.TARGETS.items():
        n = catalog.get(name).particles
        worst, consts = 0.0, set()
        ok_const = True
        zero = label == "0"
        for block in reductions.all_blocks(n):
            r = reductions.reduce_energy_subspace(name, block, n_states, seed)
            worst = max(worst, r.residual)
            if not zero:
                consts.add(complex(np.round(r.constant, 6)))
                ok_const &= _constant_ok(name, r.constant)
        if zero:
            out.append(_below("reductions", f"{name} -> 0 on every energy block", worst, 1e-10))
        else:
            detail = "constants " + ", ".join(f"{c.real:g}{c.imag:+g}i" for c in sorted(consts, key=abs))
            passed = worst < 1e-8 and ok_const
            out.append(Check("reductions", f"{name} -> {label} on every energy block", worst, 1e-8,
                             bool(passed), detail))
    for name in reductions.WEYL_NULL:
        n = catalog.get(name).particles
        worst = max(reductions.weyl_max_value(name, ch, weyl_states, seed)
                    for ch in itertools.product("LR", repeat=n))
        out.append(_below("reductions", f"{name} -> 0 for Weyl chiralities", worst, 1e-10))
    return out


# ---------------------------------------------------- ranks and dependencies

STATED_RANKS = {"2p-(2,2)": 27, "2p-(3,1)": 20, "3p-(2,2)-selected": 21, "3p-(3,1)": 20}


def dependencies_suite(seed: int = 0) -> list[Check]:
    out = []
    for fam, expected in STATED_RANKS.items():
        r = analysis.numeric_rank_report(catalog.FAMILIES[fam], seed=seed)
        out.append(Check("dependencies", f"rank {fam}", r.rank, expected, r.rank == expected,
                         f"smallest kept {r.smallest_retained:.3g}, largest dropped {r.largest_discarded:.3g}"))
    for k, (eq, v) in enumerate(zip(catalog.DEPENDENCY_EQUATIONS,
                                    catalog.dependency_residuals(seed=seed)), start=1):
        text = " ".join(f"{'+' if c > 0 else '-'}{n}" for n, c in eq.items())
        out.append(_below("dependencies", f"relation {k}: {text} = 0", v, 1e-9))
    return out


# -------------------------------------------------------------- balancedness

STATED_VERDICTS = {
    "xccx": (False, False), "xccx2": (False, False), "xccx3": (False, False),
    "xccx4": (False, False), "utoy": (False, False), "utoya": (False, False),
    "w3": (False, False), "req1": (False, True),
}


def balance_suite(seed: int = 0) -> list[Check]:
    out = []
    for state_name, (bal, aff) in STATED_VERDICTS.items():
        s = catalog_state(state_name).state
        w = analysis.analyze(s)
        ok = w.balanced == bal and w.affinely_balanced == aff
        out.append(Check("balance", f"{state_name} verdicts", float(ok), 1.0, bool(ok),
                         f"balanced={w.balanced} affinely_balanced={w.affinely_balanced}"))
        if not aff:
            names = [n for n in catalog.list_names(particles=s.particles, extras=True)
                     if catalog.get(n).bidegree[0] != catalog.get(n).bidegree[1]]
            vals = catalog.eval_many(names, s)
            worst = max(abs(v) for v in vals.values())
            out.append(_below("balance", f"{state_name} k!=l invariants vanish", worst, 1e-10))
    return out


# ----------------------------------------------------------------- dynamics

def dynamics_suite(seed: int = 0) -> list[Check]:
    out = []
    rest = dynamics.EvolutionParams(m=1.0, t1=10.0, dt=1e-3)
    for j in range(4):
        tr = dynamics.evolve(basis_spinor(j), rest)
        err = np.max(np.abs(tr.spinors - dynamics.rest_solution(j, rest, tr.times)))
        out.append(_below("dynamics", f"free rest solution phi{j}", err, 1e-8))

    rng = np.random.default_rng(seed)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    phi = rng.normal(size=4) + 1j * rng.normal(size=4)
    q, a0 = 0.8, 0.5
    for kind, params in (
        ("C", dynamics.EvolutionParams(p=(0.3, -0.2, 0.5), m=0.0, q=q, g=0.4, A0=a0, phi=0.7, t1=2.0)),
        ("C5", dynamics.EvolutionParams(p=(0.3, -0.2, 0.5), m=0.9, q=q, g=0.0, A0=a0, t1=2.0)),
    ):
        a, b = dynamics.evolve(psi, params), dynamics.evolve(phi, params)
        vals = np.array([forms.form(kind, x, y) for x, y in zip(a.spinors, b.spinors)])
        slope = np.polyfit(a.times, np.unwrap(np.angle(vals)), 1)[0]
        out.append(_below("dynamics", f"{kind} form phase slope -2 q A0", abs(slope + 2 * q * a0), 1e-4))
        spread = np.ptp(np.abs(vals)) / np.max(np.abs(vals))
        out.append(_below("dynamics", f"{kind} form modulus constant", spread, 1e-6))

    generic = dynamics.EvolutionParams(
        p=(0.3, -0.2, 0.5), m=0.7, q=0.9, g=0.4,
        A0=lambda t: 0.5 + 0.2 * np.sin(t), A=(0.1, lambda t: 0.2 * np.cos(t), 0.0),
        phi=lambda t: 0.3 * np.cos(2 * t), t1=2.0)
    a, b = dynamics.evolve(psi, generic), dynamics.evolve(phi, generic)
    for kind in forms.FORM_KINDS:
        r = dynamics.form_evolution_residual(kind, a, b, generic)
        out.append(_below("dynamics", f"{kind} form evolution law", r, 1e-5))

    s = random_state(2, seed + 11)
    massless = dynamics.EvolutionParams(p=(0.3, -0.2, 0.5), m=0.0, q=q, g=0.4, A0=a0, t1=5.0)
    rep = dynamics.invariant_evolution_check("I1", s, massless)
    out.append(_below("dynamics", "I1 modulus constant (m = 0)", rep.modulus_spread, 1e-6))
    out.append(_below("dynamics", "I1 phase slope -2 q A0 (m = 0)", abs(rep.phase_slope + 2 * q * a0), 1e-4))
    no_g = dynamics.EvolutionParams(p=(0.3, -0.2, 0.5), m=0.9, q=q, g=0.0, A0=a0, t1=5.0)
    rep = dynamics.invariant_evolution_check("I2", s, no_g)
    out.append(_below("dynamics", "I2 modulus constant (g = 0)", rep.modulus_spread, 1e-6))
    out.append(_below("dynamics", "I2 phase slope -2 q A0 (g = 0)", abs(rep.phase_slope + 2 * q * a0), 1e-4))
    for name in ("I1", "I2"):
        rep = dynamics.invariant_evolution_check(name, s, generic)
        out.append(_below("dynamics", f"{name} evolution law, generic couplings", rep.rhs_residual, 1e-5))

    const = dynamics.EvolutionParams(p=(0.3, -0.2, 0.5), m=0.7, q=0.9, g=0.4, A0=0.5, phi=0.3,
                                     t1=1.0, dt=0.05)
    ratio = dynamics.order_ratio(psi, const)
    out.append(Check("dynamics", "RK4 error ratio dt vs dt/2", ratio, 16.0,
                     bool(abs(ratio - 16.0) < 1.5)))
    return out


SUITES = {
    "algebra": algebra_suite,
    "invariance": invariance_suite,
    "examples": examples_suite,
    "oracles": oracles_suite,
    "reductions": reductions_suite,
    "dependencies": dependencies_suite,
    "balance": balance_suite,
    "dynamics": dynamics_suite,
}


def run(suite: str, seed: int = 0) -> list[Check]:
    if suite == "all":
        return [c for fn in SUITES.values() for c in fn(seed)]
    try:
        return SUITES[suite](seed)
    except KeyError:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join([*SUITES, 'all'])}") from None
