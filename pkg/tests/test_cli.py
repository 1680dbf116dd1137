import json
import subprocess
import sys

import pytest

from unikirch.cli import main
from unikirch.enumeration import canonical_code
from unikirch.families import make_cycle, make_ukt
from unikirch.graph import read_graph, write_graph


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_cycle(tmp_path, capsys):
    path = tmp_path / "c6.graph"
    path.write_text(write_graph(make_cycle(6)))
    code, out, _ = run_cli(capsys, "compute", "--input", str(path))
    assert code == 0
    assert out == "Kf = 35/2\n"


def test_compute_wiener_and_sums(tmp_path, capsys):
    path = tmp_path / "p3.graph"
    path.write_text("3\n0 1\n1 2\n")
    code, out, _ = run_cli(
        capsys, "compute", "--input", str(path), "--wiener", "--vertex-sums"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Kf = 4"
    assert lines[1] == "W = 4"
    assert lines[2:] == ["Kf[0] = 3", "Kf[1] = 2", "Kf[2] = 3"]


def test_compute_resistance_matrix(tmp_path, capsys):
    path = tmp_path / "c3.graph"
    path.write_text(write_graph(make_cycle(3)))
    code, out, _ = run_cli(capsys, "compute", "--input", str(path), "--resistance-matrix")
    assert code == 0
    assert out == "Kf = 2\n3\n2/3 2/3\n2/3\n"


def test_compute_decimal(tmp_path, capsys):
    path = tmp_path / "u82.graph"
    path.write_text(write_graph(make_ukt(8, 2, 0, 0)))
    code, out, _ = run_cli(capsys, "compute", "--input", str(path), "--decimal")
    assert code == 0
    assert out == "Kf = 655/8 (~ 81.875000)\n"


def test_compute_errors(tmp_path, capsys):
    missing = tmp_path / "nope.graph"
    code, _, err = run_cli(capsys, "compute", "--input", str(missing))
    assert code == 2 and err
    bad = tmp_path / "bad.graph"
    bad.write_text("2\n0 0\n")
    code, _, err = run_cli(capsys, "compute", "--input", str(bad))
    assert code == 2 and err
    disconnected = tmp_path / "disc.graph"
    disconnected.write_text("2\n")
    code, _, err = run_cli(capsys, "compute", "--input", str(disconnected))
    assert code == 1 and err


def test_construct_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "C5")
    assert code == 0
    assert out == "5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_construct_examples(tmp_path, capsys):
    path = tmp_path / "g.graph"
    code, _, _ = run_cli(capsys, "construct", "--family", "U(3,2,2,1)", "--out", str(path))
    assert code == 0
    g = read_graph(path.read_text())
    assert g.n == 9
    assert g == make_ukt(3, 2, 2, 1)

    code, _, _ = run_cli(capsys, "construct", "--family", "Unm(14,4)", "--out", str(path))
    assert code == 0
    from unikirch.resistance import kirchhoff_index

    assert kirchhoff_index(read_graph(path.read_text())) == 174


def test_construct_rejects(capsys):
    code, _, err = run_cli(capsys, "construct", "--family", "U(2,0,0,0)")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "construct", "--family", "what")
    assert code == 2 and err


def test_enumerate_count_only(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--count-only")
    assert code == 0
    assert "4,*,2" in out.splitlines()
    code, out, _ = run_cli(capsys, "enumerate", "--n", "6", "--m", "3", "--count-only")
    assert code == 0
    (line,) = out.splitlines()
    n, m, count = line.split(",")
    assert (n, m) == ("6", "3") and int(count) > 0


def test_enumerate_emit(tmp_path, capsys):
    out_dir = tmp_path / "classes"
    code, _, _ = run_cli(capsys, "enumerate", "--n", "5", "--emit", str(out_dir))
    assert code == 0
    files = sorted(out_dir.iterdir())
    assert len(files) == 5
    codes = {canonical_code(read_graph(p.read_text())) for p in files}
    assert len(codes) == 5
    for p in files:
        g = read_graph(p.read_text())
        assert p.name == f"{canonical_code(g).stable_hash()}.graph"


def test_enumerate_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "enumerate", "--n", "6")
    assert code == 0
    code, out2, _ = run_cli(capsys, "enumerate", "--n", "6")
    assert out1 == out2


def test_extremal_output(capsys):
    code, out, _ = run_cli(capsys, "extremal", "--n", "10", "--m", "5")
    assert code == 0
    assert out == "U(8,2,0,0)  655/8\n"
    code, out, _ = run_cli(capsys, "extremal", "--n", "9", "--m", "4")
    assert code == 0
    assert sorted(out.splitlines()) == ["C9  60", "U(7,1,1,0)  60"]


def test_extremal_wiener(capsys):
    code, out, _ = run_cli(
        capsys, "extremal", "--n", "8", "--m", "4", "--invariant", "wiener"
    )
    assert code == 0
    assert out.endswith("\n") and out


def test_verify_exit_codes_and_json(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "tables", "--json", str(report_path)
    )
    assert code == 0
    assert "summary: 137 passed, 0 failed" in out
    payload = json.loads(report_path.read_text())
    assert payload["suite"] == "tables"
    assert payload["summary"] == {"pass": 137, "fail": 0, "skipped": 0}
    assert len(payload["notes"]) == 2


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--nope"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "c4.graph"
    path.write_text(write_graph(make_cycle(4)))
    proc = subprocess.run(
        [sys.executable, "-m", "unikirch", "compute", "--input", str(path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "Kf = 5\n"


def test_threads_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("UNIKIRCH_THREADS", "2")
    code, out, _ = run_cli(capsys, "verify", "--suite", "girth-minima", "--max-n", "6")
    assert code == 0
    assert "0 failed" in out
