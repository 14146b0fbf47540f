from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from pforest.cli import main
from pforest.formats import parse_edge_list

C4 = "4 4\n1 2\n2 3\n3 4\n1 4\n"
C5 = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n"
K4 = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_find_c4(write):
    code, out, _ = run("find", write("c4.txt", C4))
    assert code == 0
    assert out.splitlines()[0] == "perfect-forest n=4 trees=2 components=1 iterations=0"


def test_find_structured(write):
    code, out, _ = run("find", write("k4.txt", K4), "--format", "structured", "--check-algebra")
    doc = json.loads(out)
    assert code == 0 and doc["iterations"] == 1 and doc["component_count"] == 1
    assert doc["trees"] == [{"edges": [[1, 4]], "vertices": [1, 4]},
                            {"edges": [[2, 3]], "vertices": [2, 3]}]


def test_find_odd(write):
    code, out, err = run("find", write("c5.txt", C5))
    assert code == 2 and out == ""
    assert "vertex 1" in err and "even number of vertices" in err


def test_verify_round_trip(write):
    g = write("c4.txt", C4)
    for fmt in ("text", "structured"):
        _, forest, _ = run("find", g, "--format", fmt)
        code, out, _ = run("verify", g, write(f"f.{fmt}", forest))
        assert code == 0 and out == "valid\n"


def test_verify_failure(write):
    bad = "perfect-forest\ntree 1 edges: 1-2 2-3 3-4\n"
    code, out, _ = run("verify", write("c4.txt", C4), write("bad.txt", bad))
    assert code == 1
    assert out.splitlines() == [
        "EvenDegree: vertex 2 has degree 2",
        "EvenDegree: vertex 3 has degree 2",
        "NotInduced: edge 1-4 joins two vertices of tree {1, 2, 3, 4} but is not in the forest",
    ]
    code, out, _ = run("verify", write("c4.txt", C4), write("bad.txt", bad), "--format", "structured")
    assert code == 1 and json.loads(out)["valid"] is False


def test_verify_foreign_edge(write):
    code, _, err = run("verify", write("c4.txt", C4), write("f.txt", "perfect-forest\ntree 1 edges: 1-3\n"))
    assert code == 65 and "not an edge" in err


def test_enumerate(write):
    code, out, _ = run("enumerate", write("k4.txt", K4))
    assert code == 0
    assert out == "3 perfect forests (64 subsets scanned)\n1-4 2-3\n1-3 2-4\n1-2 3-4\n"
    code, out, _ = run("enumerate", write("k4.txt", K4), "--format", "structured")
    assert json.loads(out)["forests"][0] == [[1, 4], [2, 3]]


def test_enumerate_cap(write):
    code, _, err = run("enumerate", write("k4.txt", K4), "--cap", "5")
    assert code == 65 and "cap" in err


def test_gen():
    code, out, _ = run("gen", "--n", "6", "--p", "1.0", "--seed", "9")
    assert code == 0 and parse_edge_list(out).m == 15
    code, out, _ = run("gen", "--n", "6", "--seed", "9")
    assert parse_edge_list(out).m == 5


def test_check():
    code, out, _ = run("check", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "38 graphs, 0 failures"
    code, out, _ = run("check", "--n", "2", "--format", "structured")
    assert json.loads(out)["graphs_checked"] == 1


@pytest.mark.parametrize("n", ["3", "8"])
def test_check_bad_n(n):
    assert run("check", "--n", n)[0] == 64


def test_flip(write):
    code, out, _ = run("flip", write("k4.txt", K4))
    assert code == 0
    h = parse_edge_list(out)
    assert h.m == 4 and all(h.degree(v) == 2 for v in h.vertices)
    assert "# certificate: |E(H)| = 4 >= |E(G)| - 2n + 2 = 0" in out
    assert "# vertex 1: d_G = 3 (parity 1), d_H = 2 (parity 0)" in out
    code, out, _ = run("flip", write("c4.txt", C4), "--format", "structured")
    doc = json.loads(out)
    assert doc["edges"] == [[1, 2], [3, 4]] and doc["certificate"]["valid"]


def test_flip_odd(write):
    assert run("flip", write("c5.txt", C5))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["find"], ["gen"], ["gen", "--n", "4", "--p", "2"],
     ["gen", "--n", "4", "--seed", "-1"], ["gen", "--n", "0"],
     ["find", "x", "--format", "xml"], ["find", "x", "--nope"]],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 64 and out == ""
    assert "usage" in err or "error" in err


def test_bad_input_file(write):
    code, _, err = run("find", write("bad.txt", "2 1\n1 1\n"))
    assert code == 65 and "line 2" in err
    assert run("find", "/nonexistent/graph.txt")[0] == 65


def test_stdin_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "pforest", "find", "-"],
        input=C4, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("perfect-forest n=4 trees=2")


def test_pipeline_sweep(write):
    """gen -> find -> verify over 1,000 seeds."""
    for seed in range(1000):
        n = 2 * (seed % 15 + 1)
        _, graph, _ = run("gen", "--n", str(n), "--p", "0.2", "--seed", str(seed))
        gpath = write("g.txt", graph)
        code, forest, _ = run("find", gpath)
        assert code == 0
        assert run("verify", gpath, write("f.txt", forest))[0] == 0
