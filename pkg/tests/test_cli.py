import json

import pytest

from mcnkit.catalog import SAT_EXAMPLE_DIMACS, six_vertex_game, split_graph_example
from mcnkit.cli import main
from mcnkit.graph import Graph, Instance, parse_instance, serialize_instance


@pytest.fixture
def six(tmp_path):
    path = tmp_path / "six.json"
    path.write_text(serialize_instance(six_vertex_game()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_full_game(capsys, six):
    code, out, _ = run(capsys, "solve", "--problem", "mcn", "--instance", six)
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 4 and doc["infected_benefit"] == 2
    assert doc["algorithm"] == "brute"
    assert len(doc["digest"]) == 64


def test_solve_tie_break_last(capsys, six):
    code, out, _ = run(capsys, "solve", "--problem", "mcn", "--instance", six, "--tie-break", "last")
    doc = json.loads(out)
    assert code == 0 and (doc["D"], doc["I"], doc["P"]) == ([2], [1], [0])


def test_solve_with_named_moves(capsys, six):
    code, out, _ = run(capsys, "solve", "--problem", "protect", "--instance", six,
                       "--D", "3", "--I", "2")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 4 and doc["P"] == [0]


def test_poly_on_tree(capsys, tmp_path):
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    path = tmp_path / "path.json"
    path.write_text(serialize_instance(Instance.build(g, phi=1, lam=1)))
    code, out, _ = run(capsys, "solve", "--problem", "protect", "--algo", "poly",
                       "--instance", str(path), "--I", "2")
    doc = json.loads(out)
    assert code == 0 and doc["algorithm"] == "tree-dp" and doc["value"] == 2
    code, out, _ = run(capsys, "solve", "--problem", "attack", "--algo", "poly", "--instance", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["algorithm"] == "components-unitary" and doc["value"] == 0


def test_poly_refuses_unsupported_instance(capsys, six):
    code, _, err = run(capsys, "solve", "--problem", "protect", "--algo", "poly", "--instance", six,
                       "--I", "2")
    assert code == 2 and "arborescence" in err


def test_size_cap(capsys, six):
    code, _, err = run(capsys, "solve", "--problem", "mcn", "--instance", six, "--max-plays", "3")
    assert code == 3 and "too large" in err


@pytest.mark.parametrize("argv", [
    ["solve", "--problem", "mcn"],
    ["solve", "--problem", "nope", "--instance", "x"],
    ["solve", "--problem", "mcn", "--instance", "/does/not/exist.json"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_bad_instance_document(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"directed": true, "n": 2, "arcs": [[0, 0]], "omega": 0, "phi": 0, "lambda": 0}')
    code, _, err = run(capsys, "solve", "--problem", "mcn", "--instance", str(path))
    assert code == 2 and "self-loop" in err


def test_reduce_split(capsys, tmp_path):
    src = tmp_path / "split.json"
    src.write_text(json.dumps(split_graph_example()))
    out = tmp_path / "target.json"
    code, stdout, _ = run(capsys, "reduce", "--from", "cnp-split", "--in", str(src), "--out", str(out))
    doc = json.loads(stdout)
    assert code == 0 and doc["n"] == 8 and doc["K"] == 4
    target = parse_instance(out.read_text())
    assert target.n == 8


def test_reduce_3sat_then_solve(capsys, tmp_path):
    src = tmp_path / "f.cnf"
    src.write_text(SAT_EXAMPLE_DIMACS)
    out = tmp_path / "target.json"
    assert main(["reduce", "--from", "3sat", "--in", str(src), "--out", str(out)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["phi"] == 3 and doc["K"] == 21
    code, stdout, _ = run(capsys, "solve", "--problem", "attack", "--instance", str(out))
    solved = json.loads(stdout)
    assert code == 0 and solved["infected_benefit"] >= 21


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--reduction", "3sat", "--samples", "5", "--seed", "1")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "verify", "--reduction", "b3cnf-tik", "--samples", "50", "--seed", "6")
    doc = json.loads(out)
    assert code == 1 and doc["mismatches"] > 0 and doc["first_mismatch"]


def test_gen_is_reproducible(capsys):
    code, a, _ = run(capsys, "gen", "--shape", "tree", "--n", "6", "--seed", "3")
    _, b, _ = run(capsys, "gen", "--shape", "tree", "--n", "6", "--seed", "3")
    assert code == 0 and a == b
    assert parse_instance(a).n == 6


def test_bench_tree_dp(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "tree-dp")
    doc = json.loads(out)
    assert code == 0 and doc["results"][1]["ok"]
