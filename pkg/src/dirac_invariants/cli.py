"""Command-line front end: dirac-inv {eval, check, balance, contract, rank, evolve}.

Exit codes: 0 success, 1 failed checks, 2 unreadable or malformed state file,
3 unknown invariant/family name or particle-count mismatch, 4 pattern error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import analysis, catalog, checks, contraction, dynamics, forms
from .states import CATALOG_NAMES, StateTensor, catalog_state, random_spinor

SCHEMA = 1
EXIT_OK, EXIT_CHECK, EXIT_STATE, EXIT_NAME, EXIT_PATTERN = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _g6(x: float) -> str:
    return f"{x:.6g}"


def _cfmt(z: complex) -> str:
    return f"{_g6(z.real)}{'+' if z.imag >= 0 else '-'}{_g6(abs(z.imag))}i"


def read_state(spec: str) -> StateTensor:
    """Load a state file; a bare catalog name loads the shipped example."""
    if not os.path.exists(spec) and spec in CATALOG_NAMES:
        return catalog_state(spec).state
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as e:
        raise CliError(EXIT_STATE, f"{spec}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CliError(EXIT_STATE, f"{spec}: line {e.lineno}, column {e.colno}: {e.msg}") from None
    try:
        return StateTensor.from_json(data)
    except ValueError as e:
        raise CliError(EXIT_STATE, f"{spec}: {e}") from None


def _names(arg: str | None, particles: int) -> list[str]:
    if not arg:
        return catalog.list_names(particles=particles)
    names = [n.strip() for n in arg.split(",") if n.strip()]
    valid = catalog.list_names(particles=particles, extras=True)
    for n in names:
        try:
            catalog.get(n)
        except KeyError:
            raise CliError(EXIT_NAME, f"unknown invariant {n!r}; valid names for {particles} particles: "
                                      + ", ".join(valid)) from None
        if n not in valid:
            raise CliError(EXIT_NAME, f"{n} is not a {particles}-particle invariant; valid names: "
                                      + ", ".join(valid))
    return names


# ------------------------------------------------------------------ output

def _emit(args, payload: dict, table_rows: list[list[str]], header: list[str], csv_rows=None):
    fmt = args.format
    if fmt == "json":
        text = json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(csv_rows if csv_rows is not None else table_rows)
        text = buf.getvalue()
    else:
        widths = [max(len(str(r[i])) for r in [header, *table_rows]) for i in range(len(header))]
        lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
        lines += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in table_rows]
        text = "\n".join(lines) + "\n"
        if payload.get("summary"):
            text += payload["summary"] + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_eval(args) -> int:
    if not args.state:
        raise CliError(EXIT_STATE, "eval needs --state")
    results, rows, crow = [], [], []
    for spec in args.state:
        s = read_state(spec)
        names = _names(args.names, s.particles)
        vals = catalog.eval_many(names, s)
        out = []
        for n in names:
            inv = catalog.get(n)
            v = vals[n]
            out.append({"name": n, "value": [v.real, v.imag], "abs": abs(v),
                        "bidegree": list(inv.bidegree), "scope": inv.scope.label()})
            rows.append([spec, n, _cfmt(v), _g6(abs(v)), f"({inv.bidegree[0]},{inv.bidegree[1]})",
                         inv.scope.label()])
            crow.append([spec, n, repr(v.real), repr(v.imag), repr(abs(v)),
                         f"({inv.bidegree[0]},{inv.bidegree[1]})", inv.scope.label()])
        results.append({"state": spec, "particles": s.particles, "rows": out})
    header = ["state", "name", "value", "|value|", "bidegree", "scope"]
    if args.format == "csv":
        header = ["state", "name", "re", "im", "abs", "bidegree", "scope"]
    _emit(args, {"command": "eval", "results": results}, rows, header, crow)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        res = checks.run(args.suite, args.seed)
    except KeyError as e:
        raise CliError(EXIT_NAME, str(e.args[0])) from None
    failed = sum(not c.passed for c in res)
    rows = [[c.suite, c.name, "pass" if c.passed else "FAIL", _g6(c.value), _g6(c.threshold), c.detail]
            for c in res]
    crow = [[c.suite, c.name, int(c.passed), repr(c.value), repr(c.threshold), c.detail] for c in res]
    summary = f"{len(res) - failed} passed, {failed} failed"
    _emit(args, {"command": "check", "suite": args.suite, "seed": args.seed,
                 "passed": failed == 0, "checks": [c.to_json() for c in res], "summary": summary},
          rows, ["suite", "check", "verdict", "value", "threshold", "detail"], crow)
    return EXIT_OK if failed == 0 else EXIT_CHECK


def cmd_balance(args) -> int:
    if not args.state:
        raise CliError(EXIT_STATE, "balance needs --state")
    eps = 1e-10 if args.tol is None else args.tol
    results, rows = [], []
    for spec in args.state:
        s = read_state(spec)
        try:
            w = analysis.analyze(s, eps)
        except ValueError as e:
            raise CliError(EXIT_STATE, f"{spec}: {e}") from None
        sweep = analysis.frame_sweep(s, args.frames, args.seed, eps)
        results.append({
            "state": spec, "support": [list(i) for i in w.support], "weights": [list(v) for v in w.weights],
            "balanced": w.balanced, "affinely_balanced": w.affinely_balanced,
            "frame_sweep": {"frames": sweep.frames, "balanced_frames": sweep.balanced_frames,
                            "affinely_balanced_frames": sweep.affinely_balanced_frames},
        })
        for idx, wv in zip(w.support, w.weights):
            rows.append([spec, "".join(map(str, idx)), " ".join(f"{x:+d}" for x in wv)])
        yes = {True: "yes", False: "no"}
        rows.append([spec, "verdict", f"balanced: {yes[w.balanced]}, affinely balanced: {yes[w.affinely_balanced]}"])
        rows.append([spec, "frames", f"{sweep.balanced_frames}/{sweep.frames} balanced, "
                                     f"{sweep.affinely_balanced_frames}/{sweep.frames} affinely balanced "
                                     "(sampled frames only)"])
    _emit(args, {"command": "balance", "results": results}, rows, ["state", "support", "weights"])
    return EXIT_OK


def cmd_contract(args) -> int:
    try:
        p = contraction.parse(args.pattern)
    except contraction.PatternError as e:
        raise CliError(EXIT_PATTERN, f"pattern error: {e}") from None
    if not args.state:
        raise CliError(EXIT_STATE, "contract needs --state")
    results, rows = [], []
    plan = contraction.plan(p)
    for spec in args.state:
        s = read_state(spec)
        try:
            v = contraction.evaluate(p, s)
        except contraction.ParticleMismatchError as e:
            raise CliError(EXIT_NAME, str(e)) from None
        results.append({"state": spec, "value": [v.real, v.imag], "abs": abs(v),
                        "plan_flops": plan.flops, "naive_flops": plan.naive_flops})
        rows.append([spec, _cfmt(v), _g6(abs(v)), str(plan.flops), str(plan.naive_flops)])
    _emit(args, {"command": "contract", "pattern": p.to_text(), "results": results,
                 "plan": plan.describe(),
                 "summary": "\n".join(plan.describe() + [f"plan {plan.flops} flops, naive {plan.naive_flops} flops"])},
          rows, ["state", "value", "|value|", "plan flops", "naive flops"])
    return EXIT_OK


def cmd_rank(args) -> int:
    if args.target in catalog.FAMILIES:
        names = catalog.FAMILIES[args.target]
    elif args.target:
        names = tuple(n.strip() for n in args.target.split(",") if n.strip())
    else:
        raise CliError(EXIT_NAME, "rank needs a family or comma-separated names; families: "
                                  + ", ".join(catalog.FAMILIES))
    for n in names:
        try:
            catalog.get(n)
        except KeyError:
            raise CliError(EXIT_NAME, f"unknown name or family {n!r}; families: "
                                      + ", ".join(catalog.FAMILIES)) from None
    tol = 1e-8 if args.tol is None else args.tol
    try:
        r = analysis.numeric_rank_report(names, args.n_states, args.seed, tol)
    except ValueError as e:
        raise CliError(EXIT_NAME, str(e)) from None
    payload = {"command": "rank", "target": args.target, "names": list(names), "rank": r.rank,
               "smallest_retained": r.smallest_retained, "largest_discarded": r.largest_discarded,
               "singular_values": [float(x) for x in r.singular_values], "tol_rel": tol, "seed": args.seed}
    rows = [[args.target, str(len(names)), str(r.rank), _g6(r.smallest_retained), _g6(r.largest_discarded)]]
    _emit(args, payload, rows, ["target", "size", "rank", "smallest kept", "largest dropped"])
    return EXIT_OK


def cmd_evolve(args) -> int:
    pair, spinors = None, []
    for spec in args.state or []:
        s = read_state(spec)
        if s.particles == 2 and pair is None:
            pair = s
        elif s.particles == 1 and len(spinors) < 2:
            spinors.append(s.tensor)
        else:
            raise CliError(EXIT_STATE, f"{spec}: evolve takes one 2-particle state and up to two spinors")
    rng = np.random.default_rng(args.seed)
    while len(spinors) < 2:
        spinors.append(random_spinor(rng))
    if pair is None:
        pair = catalog_state("epr2").state
    try:
        params = dynamics.EvolutionParams(p=tuple(args.momentum), m=args.mass, q=args.charge, g=args.coupling,
                                          A0=args.a0, A=tuple(args.vector_potential), phi=args.pseudoscalar,
                                          t0=0.0, t1=args.t1, dt=args.dt)
    except ValueError as e:
        raise CliError(EXIT_STATE, str(e)) from None
    a = dynamics.evolve(spinors[0], params)
    b = dynamics.evolve(spinors[1], params)
    _, traj = dynamics.evolve_local(pair, 0, params)
    every = max(1, args.every)
    header = ["t"] + [f"{p}_{k}" for k in forms.FORM_KINDS for p in ("re", "im")] + ["abs_I1", "abs_I2"]
    rows = []
    for k in range(0, len(a.times), every):
        row = [a.times[k]]
        for kind in forms.FORM_KINDS:
            v = forms.form(kind, a.spinors[k], b.spinors[k])
            row += [v.real, v.imag]
        vals = catalog.eval_many(["I1", "I2"], traj[k])
        row += [abs(vals["I1"]), abs(vals["I2"])]
        rows.append(row)
    if args.format == "json":
        _emit(args, {"command": "evolve", "columns": header, "rows": rows}, [], header)
    elif args.format == "table":
        _emit(args, {}, [[_g6(x) for x in r] for r in rows], header)
    else:
        _emit(args, {}, [], header, [[repr(float(x)) for x in r] for r in rows])
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", action="append", help="state JSON file or shipped example name (repeatable)")
    common.add_argument("--names", help="comma-separated invariant names")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None,
                        help="rank: relative singular-value cutoff; balance: support epsilon")
    common.add_argument("--format", choices=("table", "json", "csv"), default=None,
                        help="output format (default: csv for evolve, table otherwise)")
    common.add_argument("--out", help="write output to this file")

    ap = argparse.ArgumentParser(prog="dirac-inv", description="Lorentz invariant entanglement polynomials "
                                 "of multi-particle Dirac spinor states.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common], help="evaluate named invariants on states")
    c = sub.add_parser("check", parents=[common], help="run a property suite")
    c.add_argument("suite", nargs="?", default="all", choices=[*checks.SUITES, "all"])
    b = sub.add_parser("balance", parents=[common], help="weight vectors and balancedness verdicts")
    b.add_argument("--frames", type=int, default=analysis.DEFAULT_FRAMES)
    k = sub.add_parser("contract", parents=[common], help="evaluate a contraction pattern")
    k.add_argument("pattern")
    r = sub.add_parser("rank", parents=[common], help="numeric rank of a family or name list")
    r.add_argument("target", nargs="?", help="family name or comma-separated names")
    r.add_argument("--n-states", type=int, default=None)
    e = sub.add_parser("evolve", parents=[common], help="evolve spinors and a two-particle state, CSV out")
    e.add_argument("--mass", type=float, default=1.0)
    e.add_argument("--charge", type=float, default=0.0)
    e.add_argument("--coupling", type=float, default=0.0, help="pseudoscalar coupling g")
    e.add_argument("--a0", type=float, default=0.0)
    e.add_argument("--vector-potential", type=float, nargs=3, default=(0.0, 0.0, 0.0))
    e.add_argument("--pseudoscalar", type=float, default=0.0, help="pseudoscalar field value")
    e.add_argument("--momentum", type=float, nargs=3, default=(0.0, 0.0, 0.0))
    e.add_argument("--t1", type=float, default=1.0)
    e.add_argument("--dt", type=float, default=1e-3)
    e.add_argument("--every", type=int, default=100, help="emit every k-th grid point")
    return ap


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "balance": cmd_balance,
            "contract": cmd_contract, "rank": cmd_rank, "evolve": cmd_evolve}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "evolve" else "table"
    if args.command == "rank" and args.target is None and args.names:
        args.target = args.names
    try:
        return COMMANDS[args.command](args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
