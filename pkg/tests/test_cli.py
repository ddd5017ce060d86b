import json
import subprocess
import sys

import pytest

from bosonfermion.boson import parse_boson
from bosonfermion.cli import main
from bosonfermion.fermion import parse_fermion
from bosonfermion.geometry import parse_quiver


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_schur_command(capsys):
    code, out, _ = run_cli(capsys, "schur", "[2,1]")
    assert code == 0
    assert out == "(1/3)*p1^3 + (-1/3)*p3\n"
    code, out, _ = run_cli(capsys, "schur", "[]")
    assert out == "1\n"
    code, out, _ = run_cli(capsys, "schur", "[1,1]")
    assert out == "(1/2)*p1^2 + (-1/2)*p2\n"


def test_apply_fermionic(capsys):
    code, out, _ = run_cli(capsys, "apply", "alpha(-1) alpha(-1)", "vac(0)")
    assert code == 0
    assert out == "phi[2] + phi[1,1]\n"
    code, out, _ = run_cli(capsys, "apply", "psi*(1)", "vac(0)")
    assert out == "0\n"
    code, out, _ = run_cli(capsys, "apply", "psi(2)", "vac(0)")
    assert out == "phi[1]@1\n"


def test_apply_geometric(capsys):
    code, out, _ = run_cli(capsys, "apply", "f(0)", "1@[]")
    assert code == 0
    assert out == "t*1@[1]\n"
    code, out, _ = run_cli(capsys, "apply", "F(1) F(0)", "1@[]")
    assert out == "t^2*1@[2]\n"


def test_apply_bosonic(capsys):
    code, out, _ = run_cli(capsys, "apply", "p(1)", "p1^2")
    assert code == 0
    assert out == "(2)*p1\n"
    code, out, _ = run_cli(capsys, "apply", "p(-2)", "1")
    assert out == "p2\n"


def test_apply_localized(capsys):
    _, class_json, _ = run_cli(capsys, "localize", "class", "[]")
    code, out, _ = run_cli(capsys, "apply", "p(-1)", class_json.strip())
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 1 and data["restrictions"]["[1]"] == "t"


def test_apply_domain_mismatch(capsys):
    code, _, err = run_cli(capsys, "apply", "psi(1)", "1@[]")
    assert code == 2
    assert "error:" in err


def test_apply_divisibility_error(capsys):
    code, _, err = run_cli(capsys, "apply", "E(0)", "1@[1]")
    assert code == 2
    assert "divisible" in err


def test_correspond_commands(capsys):
    code, out, _ = run_cli(capsys, "correspond", "sigma", "phi[2,1]")
    assert out == "(1/3)*p1^3 + (-1/3)*p3\n"
    code, out, _ = run_cli(capsys, "correspond", "sigma-inverse", "p1^2")
    assert out == "phi[2] + phi[1,1]\n"
    code, out, _ = run_cli(capsys, "correspond", "tau", "phi[2,1]")
    assert out == "t^3*1@[2,1]\n"
    code, out, _ = run_cli(capsys, "correspond", "chain", "phi[2,1]", "--json")
    data = json.loads(out)
    assert data["equal"] is True
    assert data["chain"] == data["sigma"] == "(1/3)*p1^3 + (-1/3)*p3"


def test_correspond_eta_phi_pipeline(capsys):
    _, quiver_text, _ = run_cli(capsys, "correspond", "tau", "phi[2,1]")
    _, localized_json, _ = run_cli(capsys, "correspond", "eta", quiver_text.strip())
    _, poly_text, _ = run_cli(capsys, "correspond", "phi", localized_json.strip())
    assert poly_text == "(1/3)*p1^3 + (-1/3)*p3\n"
    _, back, _ = run_cli(capsys, "correspond", "eta-inverse", localized_json.strip())
    assert back == quiver_text


def test_inner_commands(capsys):
    code, out, _ = run_cli(capsys, "inner", "fermion", "2*phi[1] + 3*phi[2]", "phi[2]")
    assert out == "3\n"
    code, out, _ = run_cli(capsys, "inner", "boson", "p2 p1", "p2 p1")
    assert out == "2\n"
    _, a, _ = run_cli(capsys, "localize", "class", "[2,1]")
    code, out, _ = run_cli(capsys, "inner", "geometric", a.strip(), a.strip())
    assert out == "1\n"


def test_localize_commands(capsys):
    code, out, _ = run_cli(capsys, "localize", "euler", "[2,1]")
    assert out == "-9*t^6\n"
    code, out, _ = run_cli(capsys, "localize", "fundamental", "[1]")
    assert json.loads(out)["restrictions"]["[1]"] == "-t^2"
    _, class_json, _ = run_cli(capsys, "localize", "class", "[2]")
    code, out, _ = run_cli(capsys, "localize", "integrate", class_json.strip())
    assert out == "1/2*t^-2\n"
    code, out, _ = run_cli(capsys, "localize", "weight", "[1]")
    assert json.loads(out) == {"-1": 1, "0": -1, "1": 1}


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "c2-toy")
    assert code == 0
    assert "PASS c2-toy" in out
    code, out, _ = run_cli(capsys, "verify", "commuting-square", "--max-size", "4", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert all(c["passed"] for c in report["checks"])


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "schur", "[1,2]")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "apply", "frob(1)", "vac(0)")
    assert code == 2
    code, _, err = run_cli(capsys, "inner", "geometric", "{bad json", "{}")
    assert code == 2


def test_outputs_reparse(capsys):
    _, out, _ = run_cli(capsys, "schur", "[3,1]")
    reparsed = parse_boson(out.strip())
    from bosonfermion.boson import schur
    from bosonfermion.partitions import Partition

    assert reparsed == schur(Partition((3, 1)))
    _, out, _ = run_cli(capsys, "apply", "alpha(-2)", "vac(0)")
    assert str(parse_fermion(out.strip())) == out.strip()
    _, out, _ = run_cli(capsys, "apply", "F(1) F(0)", "1@[]")
    assert str(parse_quiver(out.strip())) == out.strip()


def test_determinism(capsys):
    first = run_cli(capsys, "apply", "alpha(-1) alpha(-1) alpha(-1)", "vac(0)")
    second = run_cli(capsys, "apply", "alpha(-1) alpha(-1) alpha(-1)", "vac(0)")
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bosonfermion.cli", "verify", "c2-toy"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
