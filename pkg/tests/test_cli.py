import json
from pathlib import Path

import pytest

from jetforge.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jet_golden(capsys):
    code, out, _ = run(capsys, "jet", "--n", "2", str(GOLDEN / "cusp.jf"))
    assert code == 0
    assert out == (GOLDEN / "cusp_jet2.txt").read_text()


def test_jet_json_byte_stable(capsys):
    code, out1, _ = run(capsys, "jet", "--n", "1", "--format", "json", str(GOLDEN / "cusp.jf"))
    code2, out2, _ = run(capsys, "jet", "--n", "1", "--format", "json", str(GOLDEN / "cusp.jf"))
    assert code == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["relations"] == ["-x_0^3 + y_0^2", "-3*x_0^2*x_1 + 2*y_0*y_1"]


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.jf"
    bad.write_text("ring Q[x]\nideal f = x + z\n")
    code, _, err = run(capsys, "jet", "--n", "1", str(bad))
    assert code == 2
    assert "z" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["jet"])  # missing required --n
    assert ei.value.code == 2


def test_module_command(capsys):
    code, out, _ = run(capsys, "module", "--n", "1", str(GOLDEN / "full.jf"))
    assert code == 0
    assert "row 0.0 : x_0 ; 0 ; y_0 ; 0" in out
    assert "row 0.1 : x_1 ; x_0 ; y_1 ; y_0" in out


def test_module_without_declaration(tmp_path, capsys):
    doc = tmp_path / "plain.jf"
    doc.write_text("ring Q[x]\n")
    code, _, err = run(capsys, "module", "--n", "1", str(doc))
    assert code == 2


def test_omega_base_and_jet(capsys):
    code, out, _ = run(capsys, "omega", str(GOLDEN / "cusp.jf"))
    assert code == 0
    assert "basis dx dy" in out
    assert "-3*x_0^2 ; 2*y_0" in out
    code, out, _ = run(capsys, "omega", "--n", "1", str(GOLDEN / "cusp.jf"))
    assert "-6*x_0*x_1 ; -3*x_0^2 ; 2*y_1 ; 2*y_0" in out


def test_sym_command(capsys):
    code, out, _ = run(capsys, "sym", str(GOLDEN / "full.jf"))
    assert code == 0
    assert "grade e1 = 1" in out
    assert "ideal f1 = x*e1 + y*e2" in out


def test_morphism_command(capsys):
    code, out, _ = run(capsys, "morphism", "--n", "1", str(GOLDEN / "full.jf"))
    assert code == 0
    assert "x_1 -> 2*u_0*u_1" in out
    assert "y_1 -> 3*u_0^2*u_1" in out


def test_jet2_command(capsys):
    code, out, _ = run(capsys, "jet2", "--n", "1", "--m", "1", str(GOLDEN / "cusp.jf"))
    assert code == 0
    assert "relation f.1.1 =" in out


def test_p1_command(capsys):
    code, out, _ = run(capsys, "p1", "--d", "1", "--n", "2", "--cocycle", "--sections")
    assert code == 0
    assert "cocycle ok" in out
    assert "global sections (6): e0_0 e0_1 e0_2 e1_0 e1_1 e1_2" in out


def test_p1_json(capsys):
    code, out, _ = run(capsys, "p1", "--d", "1", "--n", "1", "--cocycle",
                       "--sections", "--format", "json")
    data = json.loads(out)
    assert data["cocycle_ok"] is True
    assert data["transition"][0] == ["(1)/t0_0", "(-t0_1)/t0_0^2"]


def test_check_command_small(capsys):
    code, out, _ = run(capsys, "check", "--suite", "zigzag,p1_cocycle",
                       "--trials", "3", "--seed", "1")
    assert code == 0
    assert "overall: PASS" in out


def test_check_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "--suite", "nosuch", "--trials", "1")
    assert code == 2


def test_field_env_default(tmp_path, capsys, monkeypatch):
    doc = tmp_path / "nofld.jf"
    doc.write_text("ring [x]\nideal f = x^2 + 9\n")
    monkeypatch.setenv("JETFORGE_FIELD", "F7")
    code, out, _ = run(capsys, "jet", "--n", "0", str(doc))
    assert code == 0
    assert "relation f.0 = x_0^2 + 2" in out
