import io
import json
import os
import random
import subprocess
import sys

import pytest

from disimplicial import maximal_elimination
from disimplicial.cli import main, pivot_sequence, random_st_edges
from disimplicial.io import (ParseError, parse_bipartite_edge_list, parse_edge_list,
                             read_matrix_market, read_scheme, write_matrix_market,
                             write_scheme)

P3 = "a b\na d\nc b\n"
K22 = "s1 t1\ns1 t2\ns2 t1\ns2 t2\n"
C6 = "a b\nc b\nc d\ne d\ne f\na f\n"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return _write


def test_parse_edge_list_labels_and_comments():
    g = parse_edge_list(["# header", "a b  # trailing", "", "b c"])
    assert g.labels == ("a", "b", "c") and g.arcs == {(0, 1), (1, 2)}
    with pytest.raises(ParseError):
        parse_edge_list(["a b c"])


def test_bipartite_overlapping_labels():
    bg = parse_bipartite_edge_list(["1 1", "1 2", "2 2"])
    g = bg.to_digraph()
    assert g.labels == ("L:1", "L:2", "R:1", "R:2")
    assert g.m == 3
    assert parse_bipartite_edge_list(["x y"]).to_digraph().labels == ("x", "y")


def test_disimplicial_command(write):
    code, out = run("disimplicial", write("p3.txt", P3))
    assert code == 0
    assert out == "# disimplicial: 2\na\td\nc\tb\n"
    code, out = run("disimplicial", write("k22.txt", K22), "--json")
    assert json.loads(out)["count"] == 4
    code, out = run("disimplicial", write("empty.txt", "# nothing\n"))
    assert out == "# disimplicial: 0\n"


def test_eliminate_command(write):
    code, out = run("eliminate", write("k22.txt", K22))
    assert "# perfect_elimination: true" in out and "# perfect: true" in out
    code, out = run("eliminate", write("c6.txt", C6), "--json")
    doc = json.loads(out)
    assert doc["steps"] == [] and doc["perfect"] is False and doc["perfect_elimination"] is False
    p3 = write("p3.txt", P3)
    code, out = run("eliminate", p3, "--matching", write("m.txt", "a b\n"), "--json")
    assert code == 0 and json.loads(out)["steps"] == []


def test_eliminate_bad_matching_exits_2(write, capsys):
    p3 = write("p3.txt", P3)
    assert run("eliminate", p3, "--matching", write("m.txt", "a z\n"))[0] == 2
    assert run("eliminate", p3, "--matching", write("m2.txt", "a b\na d\n"))[0] == 2
    assert run("eliminate", p3, "--matching", write("m3.txt", "b a\n"))[0] == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_exits_1(write, tmp_path):
    assert run("disimplicial", write("bad.txt", "a b c\n"))[0] == 1
    assert run("classify", tmp_path / "missing.txt")[0] == 1


def test_several_files_need_each(write):
    a, b = write("a.txt", P3), write("b.txt", K22)
    assert run("disimplicial", a, b)[0] == 2
    code, out = run("disimplicial", a, b, "--each")
    assert code == 0 and out.count("## ") == 2


def test_classify_command(write):
    code, out = run("classify", write("p3.txt", P3))
    lines = dict(line.split("\t", 1) for line in out.splitlines())
    assert lines["is_st"] == "true" and lines["is_order"] == "false"
    assert json.loads(lines["witness"])["property"] == "reflexive"
    diamond = "b b\nx x\ny y\nt t\nb x\nb y\nb t\nx t\ny t\n"
    code, out = run("classify", write("d.txt", diamond), "--json")
    doc = json.loads(out)
    assert doc["is_order"] and doc["is_dedekind"] and doc["witness"] is None


def test_bipartite_flag(write):
    code, out = run("disimplicial", write("b.txt", "1 1\n1 2\n2 2\n"), "--bipartite")
    assert out == "# disimplicial: 2\nL:1\tR:1\nL:2\tR:2\n"
    path = write("b.txt", "1 1\n1 2\n2 2\n")
    code, out = run("eliminate", path, "--bipartite", "--matching", write("m.txt", "1 1\n"))
    assert code == 0 and "L:1\tR:1" in out


def test_pivots_examples(tmp_path):
    eye = tmp_path / "eye.mtx"
    write_matrix_market(eye, 2, 2, [(0, 0), (1, 1)])
    assert pivot_sequence(eye) == ([(1, 1), (2, 2)], True)
    dense = tmp_path / "dense.mtx"
    write_matrix_market(dense, 2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    pivots, perfect = pivot_sequence(dense)
    assert len(pivots) == 2 and perfect
    c6 = tmp_path / "c6.mtx"
    write_matrix_market(c6, 3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    assert pivot_sequence(c6) == ([], False)
    code, out = run("pivots", c6)
    assert out == "# pivots: 0\n# perfect: false\n"


def test_matrix_market_drops_explicit_zeros(tmp_path):
    p = tmp_path / "z.mtx"
    p.write_text("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1.5\n1 2 0\n2 2 -1\n")
    smg = read_matrix_market(p)
    assert smg.graph.m == 2 and smg.nrows == 2
    assert smg.graph.labels == ("r1", "r2", "c1", "c2")
    bad = tmp_path / "bad.mtx"
    bad.write_text("not a matrix\n")
    with pytest.raises(ParseError):
        read_matrix_market(bad)


def test_scheme_round_trip():
    g = parse_edge_list(P3.splitlines())
    s = maximal_elimination(g)
    buf = io.StringIO()
    write_scheme(buf, g, s.steps, s.perfect)
    steps, perfect = read_scheme(buf.getvalue().splitlines(), g)
    assert tuple(steps) == s.steps and perfect is True


def test_generate_is_deterministic():
    a = run("generate", "--seed", 3, "--sources", 5, "--sinks", 4, "--arcs", 8)[1]
    b = run("generate", "--seed", 3, "--sources", 5, "--sinks", 4, "--arcs", 8)[1]
    assert a == b and len(a.splitlines()) == 8
    assert len(random_st_edges(random.Random(0), 2, 2, 10)) == 4


def test_output_is_byte_identical_across_processes(write):
    p = write("g.txt", C6 + P3.replace("a", "x"))
    cmd = [sys.executable, "-m", "disimplicial.cli", "eliminate", str(p)]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True,
                            env={**os.environ, "PYTHONHASHSEED": "12345"}).stdout
    assert first == second and first
