import json
import subprocess
import sys

import pytest

from k3pencil.cli import SCHEMA, main
from k3pencil.suites import data_bytes


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, json.loads(out.out), out.err


def test_analyze_example1(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "1", "--height", "1", "--line-height", "1")
    assert code == 0 and out["schema"] == SCHEMA
    assert out["smoothness"]["status"] == "smooth"
    assert [1, 0, 0] in out["rational_points"]["points"]
    assert any(t["line"] == "x=0" and t["profile"] == [4, 2] for t in out["tritangent_lines"]["lines"])


def test_analyze_example2_singular(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "2", "--height", "1", "--line-height", "0")
    assert code == 0
    assert {"point": [1, 0, 0], "type": "node"} in out["singular_points"]


def test_pencil(capsys):
    code, out, _ = run(capsys, "pencil", "--example", "1", "--base", "0:1:1")
    assert code == 0
    assert out["fibration"]["kind"] == "genus2"
    assert any(m["t"] == "infinity" for m in out["rational_singular_members"])


def test_multisection_linear_form(capsys):
    code, out, _ = run(capsys, "multisection", "--example", "3", "--base", "0:1:0", "--line", "11y+7z")
    assert code == 0 and out["certificate"]["saliently_ramified"] is True


def test_tangent_search(capsys):
    code, out, _ = run(capsys, "tangent-search", "--example", "1", "--base", "0:1:1", "--height", "1")
    assert code == 0
    assert any(c["line"] == "z=0" for c in out["certificates"])


def test_shioda_and_lattice(capsys):
    assert run(capsys, "shioda", "--rho", "4", "--fibers", "2")[1]["rank"] == 1
    code, out, _ = run(capsys, "lattice", "--gram", "2", "1", "-2")
    assert code == 0 and out["isotropic_classes"] == [] and out["genus1_class_exists"] is False


def test_count_from_file(tmp_path, capsys):
    src = tmp_path / "b.sextic"
    src.write_bytes(data_bytes("example1.sextic"))
    code, out, err = run(capsys, "count", str(src), "--p", "19", "--k", "1")
    assert code == 0 and out["count"]["N"] == 421 and "counting" in err


def test_count_refused(capsys, monkeypatch):
    monkeypatch.setenv("K3PENCIL_MAX_COUNT_COST", "10")
    code, out, err = run(capsys, "count", "--example", "1", "--p", "19", "--quiet")
    assert code == 2 and "CountRefused" in out["error"] and err


def test_charpoly_builtin(capsys):
    code, out, _ = run(capsys, "charpoly", "--builtin", "--algebraic", "19", "19", "--predict", "1", "2")
    assert code == 0
    assert out["functional_equation"] is True
    assert out["unit_root_eigenvalues"] == 2
    assert out["predicted_counts"] == {"1": 421, "2": 131447}


def test_elliptic_commands(capsys):
    code, out, _ = run(capsys, "elliptic", "rank-cert", "--A", "864", "--B", "81216")
    assert code == 0 and out["claim"] == "rank >= 1"
    code, out, _ = run(capsys, "elliptic", "torsion", "--A", "0", "--B", "1", "--x", "2", "--y", "3")
    assert out["torsion"] is True and out["order"] == 6
    code, out, _ = run(
        capsys, "elliptic", "quartic", "--coeffs", "2", "1", "1", "1", "0", "--compare", "864", "81216", "--bound", "5"
    )
    assert out["isomorphic_to_given"]["isomorphic"] is True
    assert out["model_isomorphic_to_jacobian"] is True


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify-example", "3")
    assert code == 0 and out["passed"] is True


def test_parse_error_reported(tmp_path, capsys):
    src = tmp_path / "bad.sextic"
    src.write_text("x^6 + y^5 +")
    code, out, err = run(capsys, "analyze", str(src))
    assert code == 2 and "ParseError" in out["error"]


def test_wrong_degree_and_missing_input(tmp_path, capsys):
    src = tmp_path / "q.sextic"
    src.write_text("x^4 + y^4 + z^4")
    assert run(capsys, "analyze", str(src))[0] == 2
    assert run(capsys, "analyze")[0] == 2


def test_usage_error():
    with pytest.raises(SystemExit):
        main(["pencil", "--example", "1"])


def test_module_entry_point_stdin():
    text = "x^6 + y^6 + z^6 + x*y*z^4"
    proc = subprocess.run(
        [sys.executable, "-m", "k3pencil", "analyze", "-", "--height", "1", "--line-height", "0", "--no-smooth"],
        input=text,
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "analyze"
