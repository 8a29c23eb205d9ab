import io
import json
import subprocess
import sys

import pytest

from qabel.cli import main


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_verify_single_identity():
    code, text = call("verify", "--identity", "euler", "--order", "20")
    assert code == 0
    (rep,) = json.loads(text)
    assert rep["identity"] == "euler" and rep["status"] == "pass" and rep["first_mismatch"] is None
    assert set(rep) == {"identity", "order", "status", "first_mismatch", "ms"}


def test_verify_is_deterministic_without_timing():
    argv = ("verify", "--identity", "chain_eq5", "--identity", "thm3", "--function", "mobius",
            "--a", "mu_p", "--order", "15", "--no-timing")
    first, second = call(*argv), call(*argv)
    assert first == second
    assert all(r["ms"] == 0 for r in json.loads(first[1]))


def test_verify_function_file(tmp_path):
    p = tmp_path / "g.csv"
    p.write_text("n,value\n" + "".join(f"{n},{(-1) ** n}/{n}\n" for n in range(1, 16)))
    code, text = call("verify", "--identity", "chain_eq8", "--function-file", str(p), "--order", "15")
    assert code == 0
    assert json.loads(text)[0]["identity"] == "chain_eq8[g]"


def test_function_file_errors_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.csv"
    p.write_text("n,value\n1,1\n3,2\n")
    assert call("verify", "--identity", "chain_eq5", "--function-file", str(p))[0] == 2
    assert "bad.csv:3: gap" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--identity", "nosuch"),
        ("verify", "--function", "nosuch"),
        ("verify", "--backend", "float"),
        ("verify", "--order", "-1"),
        ("limit", "--form", "nosuch", "--function", "one"),
        ("limit", "--function", "one", "--stolz-m", "0.5"),
        ("limit", "--function", "one", "--order", "10"),
        ("limit", "--function", "one", "--accel", "aitken"),
        ("limit", "--form", "thm1_partition", "--function", "one", "--points", "2"),
        ("qbracket", "--a", "nosuch"),
        ("qbracket", "--a", "one", "--order", "61"),
        ("cf", "--terms", "1,x"),
        ("cf", "--form", "thm1_closed", "--q", "1.5"),
        ("nosuch",),
    ],
)
def test_configuration_errors_exit_2(argv, capsys):
    assert call(*argv)[0] == 2
    assert capsys.readouterr().err


def test_limit_json():
    code, text = call("limit", "--form", "thm1_closed", "--function", "even_indicator", "--points", "5",
                      "--cesaro-depth", "100")
    assert code == 0
    res = json.loads(text)
    assert abs(res["value"] - 0.5) < 1e-6
    assert res["cesaro_reference"] == 0.5
    assert res["settings"]["N"] == 2401
    assert len(res["raw_values"]) == 5


def test_limit_csv_trace():
    code, text = call("limit", "--form", "frobenius", "--function", "one", "--points", "4", "--output", "csv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("j,q_re,q_im,delta")
    assert len(lines) == 5
    assert float(lines[1].split(",")[1]) == 0.8


def test_limit_lambert_denominator_needs_no_function():
    code, text = call("limit", "--form", "lambert_den", "--points", "3")
    assert code == 0
    assert json.loads(text)["warning"] is not None


def test_qbracket():
    code, text = call("qbracket", "--a", "mu_p", "--order", "10")
    assert code == 0
    res = json.loads(text)
    assert res["coefficients"][:4] == ["1", "-2", "-1", "2"]
    assert res["thm3"]["status"] == "pass"


def test_qbracket_limit():
    code, text = call("qbracket", "--a", "one", "--order", "5", "--limit", "--points", "4")
    assert code == 0
    assert json.loads(text)["limit"]["agree"] is True


def test_cf_terms_exact():
    code, text = call("cf", "--terms", "1,1/2,1/4,1/8")
    assert code == 0
    res = json.loads(text)
    assert res["convergents"] == ["1", "3/2", "7/4", "15/8"] == res["partial_sums"]
    assert res["max_relative_difference"] == 0.0


def test_cf_form_terms():
    code, text = call("cf", "--form", "thm1_closed", "--function", "one", "--q", "0.5", "--depth", "20")
    assert code == 0
    assert json.loads(text)["max_relative_difference"] < 1e-12


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qabel.cli", "verify", "--identity", "euler", "--order", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["status"] == "pass"
