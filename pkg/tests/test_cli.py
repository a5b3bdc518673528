import json

import pytest

from hosoya.cli import main


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_hexagon(capsys, edge_file):
    path = edge_file("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    code, out, _ = run(capsys, "compute", "--input", path, "--method", "brute")
    assert code == 0
    assert out.splitlines()[0] == "H = 6t + 6t^2 + 3t^3; W = 27; WW = 42"
    assert "method = brute" in out


def test_compute_edge(capsys, edge_file):
    code, out, _ = run(capsys, "compute", "--input", edge_file("0 1\n"))
    assert code == 0
    assert out.splitlines()[0] == "H = t; W = 1; WW = 1"


def test_compute_auto_picks_decomposition_with_cut_vertices(capsys, edge_file):
    path = edge_file("0 1\n1 2\n2 0\n2 3\n")
    code, out, _ = run(capsys, "compute", "--input", path, "--show-decomposition")
    assert code == 0
    assert "method = decomposition" in out
    assert "cut vertices = 2" in out


def test_compute_disconnected(capsys, edge_file):
    code, _, err = run(capsys, "compute", "--input", edge_file("0 1\n2 3\n"))
    assert code == 2
    assert "line 2" in err


def test_compute_bad_line(capsys, edge_file):
    code, _, err = run(capsys, "compute", "--input", edge_file("0 1\n1 two\n"))
    assert code == 2
    assert "line 2" in err and "1 two" in err


def test_compute_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compute", "--input", str(tmp_path / "nope.txt"))
    assert code == 2 and "cannot read" in err


def test_compute_json_is_deterministic_and_consistent(capsys, edge_file):
    path = edge_file("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n")
    outs = []
    for method in ("brute", "decompose", "decompose"):
        code, out, _ = run(capsys, "compute", "--input", path, "--method", method, "--json")
        assert code == 0
        outs.append(json.loads(out))
    assert outs[1] == outs[2]
    assert outs[0]["hosoya"] == outs[1]["hosoya"]
    assert outs[1]["method"] == "decomposition"


def test_family_dendrimer(capsys):
    code, out, _ = run(capsys, "family", "dendrimer", "--k", "1")
    assert code == 0
    assert "W = 666" in out


def test_family_q(capsys):
    code, out, _ = run(capsys, "family", "q", "--m", "6", "--n", "4")
    assert code == 0
    assert "W = 636" in out


def test_family_invalid_h(capsys):
    code, _, err = run(capsys, "family", "spiro", "--q", "6", "--h", "4", "--k", "2")
    assert code == 2 and "h must be" in err


def test_family_missing_param(capsys):
    code, _, err = run(capsys, "family", "spiro", "--q", "6", "--k", "2")
    assert code == 2 and "--h" in err


def test_family_discrepancy_exit_code(capsys):
    code, out, _ = run(capsys, "family", "spiro", "--q", "6", "--h", "2", "--k", "3", "--json")
    assert code == 3
    data = json.loads(out)
    assert any("even-spiro-ww" in d for d in data["discrepancies"])
    assert data["oracle_match"] is True


def test_family_emit_graph(capsys, tmp_path):
    target = tmp_path / "t2.txt"
    code, out, _ = run(capsys, "family", "triangulane", "--k", "2", "--emit-graph", str(target))
    assert code == 0
    code, out, _ = run(capsys, "compute", "--input", str(target))
    assert out.splitlines()[0].endswith("W = 678; WW = 1626")


def test_family_emit_beyond_cap(capsys, tmp_path):
    code, _, err = run(capsys, "family", "dendrimer", "--k", "4", "--cap", "2", "--emit-graph", str(tmp_path / "x"))
    assert code == 2 and "cap" in err


def test_family_cap_from_env(capsys, monkeypatch):
    monkeypatch.setenv("HOSOYA_CAP", "1")
    code, out, _ = run(capsys, "family", "triangulane", "--k", "3", "--json")
    assert code == 0
    assert json.loads(out)["materialized"] is False


def test_verify_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "--seed", "7", "--trials", "50", "--json")
    assert code == 0
    code, second, _ = run(capsys, "verify", "--seed", "7", "--trials", "50", "--json")
    assert first == second


def test_verify_mutation_fails(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "20", "--mutate", "bouquet-identical")
    assert code == 1
    assert "[FAIL] construction formulas" in out


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "4,8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,blocks,vertices,brute_s,decompose_s,speedup,equal"
    assert len(lines) == 5
    assert all(line.endswith(",true") for line in lines[1:])


def test_bench_bad_sizes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--sizes", "4,x"])
    assert exc.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "hosoya", "family", "q", "--m", "3", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "W = " in proc.stdout
