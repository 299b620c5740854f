"""Command-line interface, exercised in process through main(argv)."""

import csv
import io
import json

import pytest

from schurcirc.circuit import deserialize
from schurcirc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_h_to_file(tmp_path, capsys):
    path = tmp_path / "h5.circ"
    code, out, err = run(
        capsys, "build", "h", "--k", "2", "--n", "5", "-o", str(path)
    )
    assert code == 0
    report = json.loads(out)
    assert report["arith"] == 8
    circ = deserialize(path.read_text())
    assert circ.evaluate((1, 2)) == 63
    assert circ.validate() == []


def test_build_writes_report_to_stderr_without_output_file(capsys):
    code, out, err = run(capsys, "build", "h", "--k", "2", "--n", "5")
    assert code == 0
    assert out.startswith("circuit k=2")
    assert json.loads(err)["arith"] == 8


def test_build_schur(tmp_path, capsys):
    path = tmp_path / "s22.circ"
    code, out, _ = run(
        capsys, "build", "schur", "--shape", "2,2", "--k", "3", "-o", str(path)
    )
    assert code == 0
    report = json.loads(out)
    assert report["shape"] == [2, 2]
    circ = deserialize(path.read_text())
    assert circ.evaluate((1, 1, 1)) == 6


def test_build_e_zero_cases(capsys):
    # degree above the variable count has no monomials at all
    code, _, err = run(capsys, "build", "e", "--k", "2", "--m", "3")
    assert code == 3
    assert "zero polynomial" in err


def test_build_dot_format(capsys):
    code, out, _ = run(
        capsys, "build", "h", "--k", "2", "--n", "3", "--format", "dot"
    )
    assert code == 0
    assert out.startswith("digraph")


def test_eval(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "schur", "--shape", "2,2,1", "--k", "3", "-o", str(path))
    code, out, _ = run(capsys, "eval", str(path), "--point", "1,1,1")
    assert code == 0
    assert out.strip() == "3"


def test_eval_arity_mismatch(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "h", "--k", "2", "--n", "3", "-o", str(path))
    code, _, err = run(capsys, "eval", str(path), "--point", "1,2,3")
    assert code == 2
    assert "error" in err


def test_eval_missing_file(capsys):
    code, _, err = run(capsys, "eval", "/nonexistent.circ", "--point", "1")
    assert code == 2


def test_eval_corrupt_file(tmp_path, capsys):
    path = tmp_path / "bad.circ"
    path.write_text("circuit k=1 out=0\n0 frobnicate 1 2\n")
    code, _, err = run(capsys, "eval", str(path), "--point", "1")
    assert code == 2
    assert "line 2" in err


def test_eval_limit(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "h", "--k", "3", "--n", "12", "-o", str(path))
    code, _, err = run(
        capsys, "eval", str(path), "--point", "9,9,9", "--limit", "1000"
    )
    assert code == 4
    assert "exceeds" in err


def test_verify_fresh_build(capsys):
    code, out, _ = run(
        capsys,
        "verify", "schur", "--shape", "3,1", "--k", "3",
        "--trials", "10", "--seed", "7",
    )
    assert code == 0
    assert out.strip() == "ok: 10 points, seed 7"


def test_verify_h_large_degree(capsys):
    code, out, _ = run(
        capsys, "verify", "h", "--k", "4", "--n", "33", "--trials", "5"
    )
    assert code == 0
    assert "ok: 5 points" in out


def test_verify_catches_corruption(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "h", "--k", "2", "--n", "4", "-o", str(path))
    # rewire the output to a sub-gate: values drop below the oracle
    text = path.read_text()
    header, rest = text.split("\n", 1)
    out_id = int(header.split("out=")[1])
    path.write_text(header.replace(f"out={out_id}", f"out={out_id - 1}") + "\n" + rest)
    code, out, _ = run(
        capsys, "verify", "h", "--k", "2", "--n", "4", "--circuit", str(path)
    )
    assert code == 1
    assert "mismatch at point" in out


def test_verify_circuit_arity_check(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "h", "--k", "3", "--n", "4", "-o", str(path))
    code, _, err = run(
        capsys, "verify", "h", "--k", "2", "--n", "4", "--circuit", str(path)
    )
    assert code == 2


def test_verify_oracle_guard(capsys):
    code, _, err = run(
        capsys,
        "verify", "schur", "--shape", "4,4,2", "--k", "6", "--cap", "100",
    )
    assert code == 4
    assert "more than 100" in err


def test_verify_seed_reproducible(capsys):
    args = ("verify", "e", "--k", "4", "--m", "2", "--seed", "3")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second


def test_stats_h_csv(capsys):
    code, out, _ = run(capsys, "stats", "h", "--k", "2", "--n", "3,5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "n", "arith", "total"]
    assert len(rows) == 3
    assert rows[2][:2] == ["2", "5"]
    assert int(rows[2][2]) == 8


def test_stats_schur_csv(capsys):
    code, out, _ = run(
        capsys, "stats", "schur", "--k", "5", "--shapes", "1"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:4] == ["shape", "k", "arith", "total"]
    assert rows[1][0] == "1"
    assert int(rows[1][2]) == 4


def test_export_dot(tmp_path, capsys):
    path = tmp_path / "c.circ"
    run(capsys, "build", "e", "--k", "3", "--m", "2", "-o", str(path))
    code, out, _ = run(capsys, "export-dot", str(path))
    assert code == 0
    assert out.startswith("digraph")
    assert "label=\"x1\"" in out


def test_missing_required_args(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "h", "--k", "2"])
    assert exc.value.code == 2


def test_bad_point_syntax(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "h", "--k", "0", "--n", "2"])
    assert exc.value.code == 2
