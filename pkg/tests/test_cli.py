import subprocess
import sys
from pathlib import Path

import pytest

from qbmg.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", SAMPLES / "p5a.qdg")
    assert code == 0 and out == "2qBMG: pass\n"


def test_check_fail_lists_witnesses(capsys):
    code, out, _ = run(capsys, "check", SAMPLES / "n3_violation.qdg")
    assert code == 1
    assert out.splitlines() == ["2qBMG: fail", "N3 {v3,v5}"]
    code, out, _ = run(capsys, "check", "--tsv", SAMPLES / "n3_violation.qdg")
    assert out.splitlines() == ["2qBMG\tfail", "N3\tv3,v5"]


def test_is_un2qbmg_golden(capsys):
    code, out, _ = run(capsys, "is-un2qbmg", SAMPLES / "p6.udg")
    assert code == 1 and out == "not an un2qBMG (243 assignments, 0 pass)\n"
    code, out, _ = run(capsys, "is-un2qbmg", "--tsv", SAMPLES / "c4.udg")
    assert code == 0 and out.splitlines() == ["un2qBMG\ttrue", "assignments\t81", "passing\t51"]


def test_forbidden(capsys):
    code, out, _ = run(capsys, "forbidden", SAMPLES / "sunlet4.udg")
    assert code == 1
    assert "P6: absent" in out and "Sunlet4: v2 v3 v8 v5 v1 v4 v7 v6" in out
    code, out, _ = run(capsys, "forbidden", SAMPLES / "p5a.qdg")
    assert code == 0 and "chordal_bipartite: true" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", SAMPLES / "p5a.qdg")
    assert code == 0 and out.splitlines() == ["K: v2 v3 v4", "S: v1 v5"]


def test_orient_pipeline(capsys):
    code, out, _ = run(capsys, "orient", "--pipeline", SAMPLES / "p5a.qdg")
    assert code == 0
    assert "topological_order: v1 v3 v2 v4 v5" in out and "K: v2 v3 v4" in out


def test_orient_strict_failure_and_weak(tmp_path, capsys):
    f = tmp_path / "g.qdg"
    f.write_text("v a1 0\nv b1 1\nv b2 1\nv b3 1\na a1 b1\na a1 b3\na b3 a1\na b2 a1\n")
    code, _, err = run(capsys, "orient", f)
    assert code == 1 and "no consistent orientation" in err
    code, out, _ = run(capsys, "orient", "--weak", f)
    assert code == 0 and "arc: a1 b3" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", SAMPLES / "c4.udg")
    lines = out.splitlines()
    assert code == 0 and lines[:3] == ["assignments: 81", "passing: 51", "classes: 10"]
    code, out, _ = run(capsys, "enumerate", "--mode", "color-preserving", SAMPLES / "c4.udg")
    assert "classes: 18" in out


def test_build_qbmg_with_truncation(tmp_path, capsys):
    code, out, _ = run(capsys, "build-qbmg", SAMPLES / "cherry.nwk", "-u", SAMPLES / "cherry.trunc")
    assert code == 0
    assert out.splitlines() == ["# colors: 0=A, 1=B", "v a1 0", "v b1 1", "v b2 1", "a a1 b1", "a b1 a1"]
    dest = tmp_path / "bmg.qdg"
    code, out, _ = run(capsys, "build-bmg", SAMPLES / "cherry.nwk", "-o", dest)
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "check", dest)
    assert code == 0


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0 and out.splitlines()[-1] == "matching mode: color-swap-allowed"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "missing.qdg"],
        ["is-un2qbmg", SAMPLES / "cherry.nwk"],
        ["build-qbmg", SAMPLES / "p6.udg"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: ") and out == ""


def test_same_color_edge_reports_line(tmp_path, capsys):
    f = tmp_path / "bad.udg"
    f.write_text("v a 0\nv b 0\ne a b\n")
    code, _, err = run(capsys, "is-un2qbmg", f)
    assert code == 2 and f"{f}:3:" in err


def test_guard_exit_2(tmp_path, capsys):
    vs = [f"v{i}" for i in range(1, 20)]
    f = tmp_path / "long.udg"
    f.write_text("".join(f"v {v} {i % 2}\n" for i, v in enumerate(vs)) + "".join(f"e {a} {b}\n" for a, b in zip(vs, vs[1:])))
    code, _, err = run(capsys, "enumerate", f)
    assert code == 2 and "limited to 16 edges" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qbmg", "check", str(SAMPLES / "p5a.qdg")], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "2qBMG: pass\n"
