import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dualhahn import cli, m1hahn

M1 = ["--alpha", "3", "--beta", "3", "--N", "2"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def csv_rows(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


def test_grid(capsys):
    code, out, _ = run(capsys, "grid", *M1)
    assert code == 0
    assert out == "s,y\n0,-5\n1,3\n2,-1\n"
    code, out, _ = run(capsys, "grid", "--alpha", "1", "--beta", "1", "--N", "1")
    assert [r["y"] for r in csv_rows(out)] == ["3", "-5"]


def test_rationals_render_losslessly(capsys):
    code, out, _ = run(capsys, "grid", "--alpha", "7/2", "--beta", "1/3", "--N", "2")
    assert csv_rows(out)[0]["y"] == str(1 - Fraction(7, 2) - Fraction(1, 3))
    code, out, _ = run(capsys, "grid", "--alpha", "7/2", "--beta", "1/3", "--N", "2", "--format", "json")
    payload = json.loads(out)
    assert set(payload) >= {"params", "rows", "residuals"}
    assert payload["rows"][0]["y"] == {"num": -17, "den": 6}
    assert payload["params"]["alpha"] == {"num": 7, "den": 2}


def test_float_mode_uses_17_digits(capsys):
    code, out, _ = run(capsys, "grid", "--alpha", "1/3", "--beta", "1/7", "--N", "1", "--mode", "float")
    assert csv_rows(out)[0]["y"] == format(1 / 3 + 1 / 7 + 1, ".17g")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["grid", "--alpha", "3", "--beta", "3", "--N", "0"])
    assert info.value.code == 2
    code, _, err = run(capsys, "grid", "--alpha", "3", "--N", "2")
    assert code == 2 and "--beta" in err
    code, _, err = run(capsys, "limits", *M1, "--eps", "0.1,0.2")
    assert code == 2 and "decreasing" in err


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", *M1)
    rows = csv_rows(out)
    assert code == 0
    assert [r["u_n"] for r in rows] == ["0", "8", "8"]
    assert [r["b_n"] for r in rows] == ["-1", "-1", "-1"]
    assert all(r["agree"] == "true" for r in rows)
    code, out, _ = run(capsys, "coeffs", "--alpha", "1", "--beta", "1", "--N", "1")
    assert [r["u_n"] for r in csv_rows(out)] == ["0", "16"]


def test_coeffs_detects_transcription_fault(capsys, monkeypatch):
    original = m1hahn.m1_recurrence_compact

    def faulty(params, n):
        u, b = original(params, n)
        return (u + 1 if n == 1 else u), b

    monkeypatch.setattr(m1hahn, "m1_recurrence_compact", faulty)
    code, out, err = run(capsys, "coeffs", *M1)
    assert code == 1
    assert csv_rows(out)[1]["agree"] == "false"
    assert "disagree" in err


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", *M1, "--format", "json")
    payload = json.loads(out)
    assert [r["weight"] for r in payload["rows"]] == [{"num": w, "den": 1} for w in (1, 1, 2)]
    assert payload["summary"]["kappa0"] == {"num": 4, "den": 1}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", *M1, "--n", "2", "--x", "-5")
    assert csv_rows(out) == [{"n": "2", "x": "-5", "value": "8", "closed": "8", "agree": "true"}]


def test_verify_exact(capsys):
    code, out, _ = run(capsys, "verify", *M1)
    rows = csv_rows(out)
    assert code == 0
    assert all(r["residual"] == "0" for r in rows if r["suite"] != "positivity")


def test_verify_flags_non_positive_measure(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "1", "--beta", "5/2", "--N", "2")
    rows = {r["suite"]: r for r in csv_rows(out)}
    assert code == 0
    assert rows["positivity"]["status"] == "measure not positive"


def test_verify_weight_pole_exits_1(capsys):
    code, _, err = run(capsys, "verify", "--alpha", "3", "--beta", "2", "--N", "2")
    assert code == 1 and "DenominatorPole" in err


def test_verify_names_failing_suite(capsys):
    code, _, err = run(capsys, "verify", "--alpha", "2", "--beta", "3", "--N", "2")
    assert code == 1 and "closed-form" in err


def test_operator(capsys):
    code, out, _ = run(capsys, "operator", *M1, "--format", "json")
    payload = json.loads(out)
    entries = {(r["matrix"], r["row"], r["col"]): r["value"] for r in payload["rows"]}
    assert entries[("A_grid", 0, 2)] == {"num": -2, "den": 1}
    assert [entries[("A_poly", i, i)]["num"] for i in range(3)] == [0, 2, 4]
    assert payload["summary"]["bandwidth"]["B_poly"] == 1


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", *M1, "--format", "json")
    payload = json.loads(out)
    assert code == 0
    orders = payload["summary"]["orders"]
    assert abs(orders["recurrence"] - 1) < 0.2 and abs(orders["operator"] - 1) < 0.2
    eig0 = [r["error"] for r in payload["rows"] if r["check"] == "eigenvalue" and r["index"] == 0]
    assert eig0 and all(e == 0 for e in eig0)


def test_limits_classical(capsys):
    code, out, _ = run(capsys, "limits", "--family", "classical", "--alpha", "1", "--beta", "2", "--N", "3")
    assert code == 0
    assert {r["check"] for r in csv_rows(out)} == {"q_to_1"}


def test_q_hahn_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "q-hahn", "--a", "1/3", "--b", "1/5", "--q", "1/2", "--N", "3")
    assert code == 0
    assert all(r["status"] == "pass" for r in csv_rows(out))


def test_exact_output_is_deterministic(capsys):
    outs = {run(capsys, "operator", *M1)[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dualhahn", "grid", *M1], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("s,y")
