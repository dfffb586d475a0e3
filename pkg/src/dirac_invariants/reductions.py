"""Rest-frame energy-block and chirality reductions of the named invariants.

On states supported in a product of P+ / P- blocks, each invariant is compared
with a spin-1/2 target polynomial up to one constant fitted across many states.
Block P+ maps spinor indices (0, 1) to qubit (0, 1); block P- maps (2, 3).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog, nr_limit
from .gamma import G0, projector
from .states import StateTensor, apply_local, random_spinor, random_state


def _lin(*pairs):
    """Linear combination of products of J's: pairs of (coeff, (k1, k2, ...))."""
    def f(q):
        js = {k: nr_limit.kempe_J(k, q) for k in range(1, 6)}
        return sum(c * np.prod([js[k] for k in ks]) for c, ks in pairs)
    return f


def _conc(q):
    return nr_limit.wootters_concurrence(q)


_TWO = {
    "I1": ("C", _conc),
    "R1": ("|C|^2", lambda q: abs(_conc(q)) ** 2),
    "R4": ("|C|^2", lambda q: abs(_conc(q)) ** 2),
    "T1": ("|C|^2", lambda q: abs(_conc(q)) ** 2),
    "I1.I1c": ("|C|^2", lambda q: abs(_conc(q)) ** 2),
    "I1.N1": ("C J1", lambda q: _conc(q) * np.vdot(q, q).real),
}
_TWO_ZERO = (("I2", "I2A", "I2B", "R2", "R2c", "R3", "R5", "R5c", "R6", "T2", "N1N4mN2N3",
              "Q1", "Q2", "Q3", "Q4")
             + tuple(n for n in catalog.FAMILIES["2p-(2,2)"] if "." in n and n != "I1.I1c")
             + tuple(n for n in catalog.FAMILIES["2p-(3,1)"] if "." in n and n != "I1.N1"))

_THREE = {
    "D03_1": ("J3-J1^2", _lin((1, (3,)), (-1, (1, 1)))),
    "B03_1": ("J2-J1^2", _lin((1, (2,)), (-1, (1, 1)))),
    "Z03_1": ("J4-J1^2", _lin((1, (4,)), (-1, (1, 1)))),
    "D21_1": ("J3-J2-J4+J1^2", _lin((1, (3,)), (-1, (2,)), (-1, (4,)), (1, (1, 1)))),
    "Z21_1": ("J4-J3-J2+J1^2", _lin((1, (4,)), (-1, (3,)), (-1, (2,)), (1, (1, 1)))),
    "B21_1": ("J2-J3-J4+J1^2", _lin((1, (2,)), (-1, (3,)), (-1, (4,)), (1, (1, 1)))),
    "B12_1": ("-J2+J1^2", _lin((-1, (2,)), (1, (1, 1)))),
    "Z12_1": ("-J4+J1^2", _lin((-1, (4,)), (1, (1, 1)))),
    "D12_1": ("-J3+J1^2", _lin((-1, (3,)), (1, (1, 1)))),
    "X12A_1": ("J4-J3", _lin((1, (4,)), (-1, (3,)))),
    "X12B_1": ("J2-J3", _lin((1, (2,)), (-1, (3,)))),
    "X12C_1": ("J2-J4", _lin((1, (2,)), (-1, (4,)))),
    "Z1": ("i s2", lambda q: 1j * nr_limit.s2(q)),
    "D1": ("i s2", lambda q: 1j * nr_limit.s2(q)),
    "B1": ("i s2", lambda q: 1j * nr_limit.s2(q)),
    "K1": ("J5-J1^3", _lin((1, (5,)), (-1, (1, 1, 1)))),
    "W1": ("-2/3 J5 + 1/2 (J2+J3+J4) J1 - 5/6 J1^3",
           _lin((-2 / 3, (5,)), (0.5, (2, 1)), (0.5, (3, 1)), (0.5, (4, 1)), (-5 / 6, (1, 1, 1)))),
}
_THREE_ZERO = (tuple(f"V{a}V{b}mV{c}V{d}" for a, b, c, d in catalog.V_DIFFERENCES)
               + tuple(n for n in catalog.FAMILIES["3p-(3,1)"] if n not in ("Z1", "D1", "B1")))

ZERO = ("0", lambda q: 0.0)
TARGETS = {**_TWO, **{n: ZERO for n in _TWO_ZERO}, **_THREE, **{n: ZERO for n in _THREE_ZERO}}

# The X-type subset indicators reduce to these combinations, each of which
# vanishes when the particle its scope singles out factors off.
OBSERVED_TARGETS = {
    **TARGETS,
    "X12A_1": ("J4-J2", _lin((1, (4,)), (-1, (2,)))),
    "X12B_1": ("J4-J3", _lin((1, (4,)), (-1, (3,)))),
    "X12C_1": ("J2-J3", _lin((1, (2,)), (-1, (3,)))),
}

WEYL_NULL = (("R1", "R2", "R2c", "R3", "R4", "R5", "R5c", "R6", "T1", "T2", "N1N4mN2N3")
             + catalog.FAMILIES["2p-(3,1)"]
             + catalog.FAMILIES["3p-(2,2)-selected"] + catalog.FAMILIES["3p-(3,1)"] + ("K1", "W1"))


@dataclass(frozen=True)
class ReductionReport:
    name: str
    block: tuple
    target: str
    constant: complex
    residual: float
    max_value: float
    max_target: float


def _parse_block(block, n):
    out = []
    for b in block:
        b = str(b).replace("P", "")
        if b not in ("+", "-"):
            raise ValueError(f"block entries must be P+ or P-, got {b!r}")
        out.append(0 if b == "+" else 2)
    if len(out) != n:
        raise ValueError(f"block needs {n} entries")
    return out


def embed_qubits(q: np.ndarray, block) -> StateTensor:
    """Place a qubit tensor into the chosen energy blocks of a Dirac tensor."""
    q = np.asarray(q, dtype=complex)
    n = q.ndim
    offsets = _parse_block(block, n)
    t = np.zeros((4,) * n, dtype=complex)
    idx = tuple(slice(o, o + 2) for o in offsets)
    t[idx] = q
    return StateTensor(t)


def reduce_energy_subspace(name: str, block, n_states: int = 30, seed: int = 0,
                           targets=None) -> ReductionReport:
    """Fit eval_named(name) = constant * target on random block-supported states.

    `targets` maps names to (label, callable on qubit tensors); defaults to TARGETS.
    """
    inv = catalog.get(name)
    targets = TARGETS if targets is None else targets
    if name not in targets:
        raise KeyError(f"no reduction target recorded for {name}")
    label, target = targets[name]
    block = tuple(block)
    rng = np.random.default_rng(seed)
    vals, tgts = [], []
    for _ in range(n_states):
        q = rng.normal(size=(2,) * inv.particles) + 1j * rng.normal(size=(2,) * inv.particles)
        q /= np.linalg.norm(q)
        vals.append(catalog.eval_named(name, embed_qubits(q, block)))
        tgts.append(complex(target(q)))
    v, t = np.array(vals), np.array(tgts)
    tmax = float(np.max(np.abs(t)))
    vmax = float(np.max(np.abs(v)))
    if tmax == 0.0:
        return ReductionReport(name, block, label, 0j, vmax, vmax, 0.0)
    c = complex(np.vdot(t, v) / np.vdot(t, t))
    resid = float(np.max(np.abs(v - c * t)) / max(vmax, 1e-300))
    return ReductionReport(name, block, label, c, resid, vmax, tmax)


def all_blocks(n: int):
    import itertools
    return [tuple("P" + s for s in combo) for combo in itertools.product("+-", repeat=n)]


def weyl_max_value(name: str, chirality, n_states: int = 10, seed: int = 0) -> float:
    """Largest |value| over random normalized states projected to the given chiralities."""
    inv = catalog.get(name)
    if len(chirality) != inv.particles:
        raise ValueError(f"chirality needs {inv.particles} entries")
    worst = 0.0
    for k in range(n_states):
        s = random_state(inv.particles, seed + k)
        for a, ch in enumerate(chirality):
            s = apply_local(s, a, projector("P" + ch.upper()))
        s = s.normalized()
        worst = max(worst, abs(catalog.eval_named(name, s)))
    return worst


# On states phi (x) Psi with one particle factored out, some subset indicators
# reduce to (phi^dag g0 phi)^2 times a two-particle invariant of Psi.
FACTORIZATIONS = {
    "B21_1": (0, ("I1.I1c",)), "D21_1": (1, ("I1.I1c",)), "Z21_1": (2, ("I1.I1c",)),
    "B12_1": (1, ("R1", "R4")), "D12_1": (0, ("R1", "R4")), "Z12_1": (0, ("R1", "R4")),
    "X12A_1": (0, ("R1", "R4")), "X12B_1": (1, ("R1", "R4")), "X12C_1": (0, ("R1", "R4")),
    "B03_1": (1, ("T1",)), "D03_1": (0, ("T1",)), "Z03_1": (0, ("T1",)),
}


@dataclass(frozen=True)
class FactorizationReport:
    name: str
    lone: int
    two_particle: str
    constant: complex
    residual: float


def factorized_reduction(name: str, lone: int | None = None, candidates=None,
                         n_states: int = 20, seed: int = 0) -> FactorizationReport:
    """Fit name(phi (x) Psi) = c (phi^dag g0 phi)^2 X(Psi), X from `candidates`.

    `lone` is the position of the factored-out particle; Psi keeps the other two
    particles in their original order.
    """
    d_lone, d_cands = FACTORIZATIONS.get(name, (None, None))
    lone = d_lone if lone is None else lone
    candidates = d_cands if candidates is None else candidates
    if lone is None or candidates is None:
        raise KeyError(f"no factorization recorded for {name}")
    rng = np.random.default_rng(seed)
    samples = []
    for k in range(n_states):
        phi = random_spinor(rng)
        pair = random_state(2, seed + 1000 + k)
        full = np.tensordot(phi, pair.tensor, axes=0)
        full = np.moveaxis(full, 0, lone)
        s = StateTensor(full)
        weight = np.vdot(phi, G0 @ phi) ** 2
        samples.append((catalog.eval_named(name, s), weight, pair))
    best = None
    for cand in candidates:
        v = np.array([x for x, _, _ in samples])
        t = np.array([w * catalog.eval_named(cand, p) for _, w, p in samples])
        c = complex(np.vdot(t, v) / np.vdot(t, t))
        resid = float(np.max(np.abs(v - c * t)) / np.max(np.abs(v)))
        if best is None or resid < best.residual:
            best = FactorizationReport(name, lone, cand, c, resid)
    return best
