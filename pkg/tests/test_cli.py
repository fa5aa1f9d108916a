import subprocess
import sys

import pytest

from vrank.cli import main
from vrank.formats import format_graph, parse_coloring, parse_graph
from vrank.generators import grid, subdivided_replicated_clique
from vrank.graph import Graph
from vrank.validators import is_l_vr, is_us


@pytest.fixture
def graph_file(tmp_path):
    def make(G, name="g.col"):
        p = tmp_path / name
        p.write_text(format_graph(G))
        return str(p)
    return make


def test_generate_grid(tmp_path, capsys):
    out = tmp_path / "g.col"
    assert main(["generate", "--family", "grid", "--rows", "3", "--cols", "3", "-o", str(out)]) == 0
    assert parse_graph(out.read_text()) == grid(3, 3)


def test_generate_stdout(capsys):
    assert main(["generate", "--family", "subclique", "--k", "2"]) == 0
    assert capsys.readouterr().out.startswith("p edge 4 4")


def test_generate_missing_param(capsys):
    assert main(["generate", "--family", "kary"]) == 2


@pytest.mark.parametrize("algo,kind", [("layered-us", "us"), ("degen-us", "us"), ("sep-lvr", "lvr")])
def test_color_and_validate(tmp_path, graph_file, capsys, algo, kind):
    g = graph_file(grid(4, 4))
    c = tmp_path / "c.txt"
    assert main(["color", "--algo", algo, "-i", g, "-o", str(c)]) == 0
    assert capsys.readouterr().out.strip().endswith("valid true")
    colors = parse_coloring(c.read_text())
    if kind == "us":
        assert is_us(grid(4, 4), colors) is None
    else:
        assert is_l_vr(grid(4, 4), colors, 2) is None
    args = ["validate", "--kind", kind, "-i", g, "-c", str(c)]
    if kind == "lvr":
        args += ["--l", "2"]
    assert main(args) == 0


def test_validate_invalid(tmp_path, graph_file, capsys):
    g = graph_file(Graph(2, [(0, 1)]))
    c = tmp_path / "c.txt"
    c.write_text("v 1 1\nv 2 1\n")
    assert main(["validate", "--kind", "proper", "-i", g, "-c", str(c)]) == 1
    assert "NotProper 1 2" in capsys.readouterr().out


def test_kary_level(tmp_path, capsys):
    gout = tmp_path / "t.col"
    assert main(["color", "--algo", "kary-level", "--k", "3", "--graph-out", str(gout)]) == 0
    assert parse_graph(gout.read_text()).n == 13
    assert "colors 3 valid true" in capsys.readouterr().out


def test_centroid_not_tree(graph_file, capsys):
    g = graph_file(grid(2, 2))
    assert main(["color", "--algo", "centroid-vr", "-i", g]) == 3


def test_sep_nonplanar_failure(graph_file, capsys):
    G = Graph(16, [(u, v) for u in range(8) for v in range(8, 16)])
    assert main(["color", "--algo", "sep-lvr", "-i", graph_file(G)]) == 3


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 3\n")
    assert main(["color", "--algo", "layered-us", "-i", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["color", "--algo", "layered-us", "-i", "/nonexistent/x.col"]) == 2


def test_exact(graph_file, capsys):
    g = graph_file(Graph(3, [(0, 1), (1, 2)]))
    assert main(["exact", "--kind", "vr", "-i", g]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "k 2"
    assert parse_coloring(out[1:]) == [1, 2, 1]


def test_exact_infeasible(graph_file, capsys):
    g = graph_file(subdivided_replicated_clique(3))
    assert main(["exact", "--kind", "us", "--max-k", "2", "-i", g]) == 0
    assert capsys.readouterr().out.strip() == "INFEASIBLE"


def test_exact_lvr_needs_l(graph_file, capsys):
    assert main(["exact", "--kind", "lvr", "-i", graph_file(Graph(1))]) == 2


def test_bench(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--suite", "tree-exact", "--sizes", "2", "3", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "instance,n,m,algorithm,l,colors,depth,valid,runtime_ms"
    assert len(lines) == 3


def test_selfcheck_small(capsys):
    assert main(["selfcheck", "--n-max", "4", "--fuzz", "100"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as info:
        main(["color"])
    assert info.value.code == 2


def test_module_entry_point(graph_file):
    g = graph_file(grid(3, 3))
    proc = subprocess.run([sys.executable, "-m", "vrank", "color", "--algo", "layered-us", "-i", g],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("valid true")
