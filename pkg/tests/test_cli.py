import json

import numpy as np
import pytest

from dirac_invariants.cli import main
from dirac_invariants.states import basis_state, product_state, random_spinor, shipped_state_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_state(tmp_path, s, name="s.json"):
    p = tmp_path / name
    p.write_text(json.dumps(s.to_json()))
    return str(p)


def test_eval_shipped_epr(capsys):
    code, out, _ = run(capsys, "eval", "--state", str(shipped_state_path("epr2")), "--names", "I1")
    assert code == 0
    row = [line for line in out.splitlines() if " I1 " in line][0]
    assert "0.5" in row.split()


def test_eval_product_state_rows_vanish(capsys, tmp_path):
    rng = np.random.default_rng(0)
    path = write_state(tmp_path, product_state([random_spinor(rng), random_spinor(rng)]).normalized())
    code, out, _ = run(capsys, "eval", "--state", path, "--names", "I1,I2,R1,T1,Q1", "--format", "json")
    assert code == 0
    rows = json.loads(out)["results"][0]["rows"]
    assert all(r["abs"] < 1e-10 for r in rows)


def test_eval_unknown_name(capsys):
    code, _, err = run(capsys, "eval", "--state", "epr2", "--names", "Nope")
    assert code == 3
    assert "I1" in err


def test_eval_particle_mismatch(capsys):
    code, _, _ = run(capsys, "eval", "--state", "w3", "--names", "I1")
    assert code == 3


def test_malformed_json_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"particles": 2,\n  "coefficients": [1, 2,\n')
    code, _, err = run(capsys, "eval", "--state", str(p))
    assert code == 2
    assert "line 3" in err


def test_wrong_coefficient_count(capsys, tmp_path):
    p = tmp_path / "short.json"
    p.write_text(json.dumps({"particles": 2, "coefficients": [[1, 0]] * 3}))
    code, _, _ = run(capsys, "eval", "--state", str(p))
    assert code == 2


def test_json_schema_and_determinism(capsys):
    _, a, _ = run(capsys, "eval", "--state", "toi", "--format", "json", "--seed", "3")
    _, b, _ = run(capsys, "eval", "--state", "toi", "--format", "json", "--seed", "3")
    assert a == b
    assert json.loads(a)["schema"] == 1


def test_rank_determinism(capsys):
    _, a, _ = run(capsys, "rank", "2p-(3,1)", "--format", "json", "--seed", "1")
    _, b, _ = run(capsys, "rank", "2p-(3,1)", "--format", "json", "--seed", "1")
    assert a == b


def test_check_algebra_passes(capsys):
    code, out, _ = run(capsys, "check", "algebra", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["checks"]
    assert all(c["passed"] for c in data["checks"])


def test_balance_verdicts(capsys):
    code, out, _ = run(capsys, "balance", "--state", "w3", "--frames", "2")
    assert code == 0
    assert "balanced: no, affinely balanced: no" in out
    code, out, _ = run(capsys, "balance", "--state", "req1", "--frames", "2")
    assert "balanced: no, affinely balanced: yes" in out


def test_balance_basis_product(capsys, tmp_path):
    path = write_state(tmp_path, basis_state([0, 1]))
    code, out, _ = run(capsys, "balance", "--state", path, "--frames", "1", "--format", "json")
    assert code == 0
    res = json.loads(out)["results"][0]
    assert res["weights"] == [[-1, 1]]
    assert res["balanced"] is False


def test_contract_v1_on_basis(capsys, tmp_path):
    path = write_state(tmp_path, basis_state([0, 0, 0]))
    code, out, _ = run(capsys, "contract", "g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]",
                       "--state", path, "--format", "json")
    assert code == 0
    res = json.loads(out)["results"][0]
    assert res["value"] == [1.0, 0.0]


def test_contract_w1_on_w_state(capsys):
    from dirac_invariants.catalog import W_TEXT
    code, out, _ = run(capsys, "contract", W_TEXT, "--state", "w3", "--format", "json")
    assert code == 0
    assert abs(json.loads(out)["results"][0]["abs"] - 4 / 27) < 1e-9


def test_contract_bad_pattern(capsys):
    code, _, err = run(capsys, "contract", "C[i j] Psi[i k] Psi*[j n] g0[k n]", "--state", "epr2")
    assert code == 4
    assert "'i'" in err


def test_rank_families(capsys):
    for fam, expected in (("2p-(2,2)", 27), ("2p-(3,1)", 20), ("3p-(2,2)-selected", 21)):
        code, out, _ = run(capsys, "rank", fam, "--format", "json")
        assert code == 0
        assert json.loads(out)["rank"] == expected


def test_rank_mixed_names(capsys):
    code, _, _ = run(capsys, "rank", "I1,V1")
    assert code == 3


def test_evolve_csv(capsys, tmp_path):
    out_path = tmp_path / "ev.csv"
    code, _, _ = run(capsys, "evolve", "--mass", "0", "--charge", "0.8", "--a0", "0.5", "--t1", "0.5",
                     "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "t,re_C,im_C,re_C5,im_C5,re_G0,im_G0,re_G05,im_G05,abs_I1,abs_I2"
    assert len(lines) == 1 + 6
    i1 = [float(line.split(",")[-2]) for line in lines[1:]]
    assert max(i1) - min(i1) < 1e-6
