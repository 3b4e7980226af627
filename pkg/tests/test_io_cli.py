import io
import json
import subprocess
import sys

import numpy as np
import pytest

from vizing8 import generate_planar
from vizing8.cli import EXIT_GUARANTEE, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from vizing8.graph_core import new_graph
from vizing8.io import (ColoringFile, EdgeListFile, ParseError, read_coloring, read_graph,
                        write_coloring, write_graph)


def k9_text():
    pairs = [(i, j) for i in range(9) for j in range(i + 1, 9)]
    return EdgeListFile.from_graph(new_graph(9, pairs)).format()


def test_edge_list_round_trip():
    g = generate_planar(200, 1, "sparse")
    buf = io.StringIO()
    write_graph(g, buf)
    h = read_graph(buf.getvalue())
    assert (h.n, h.m) == (g.n, g.m)
    assert {frozenset(p) for p in h.edges} == {frozenset(p) for p in g.edges}


def test_coloring_round_trip():
    g = generate_planar(100, 2)
    colors = (np.arange(g.m) % 8 + 1).astype(np.int64)
    buf = io.StringIO()
    write_coloring(g, colors, buf)
    assert np.array_equal(read_coloring(buf.getvalue(), g), colors)
    flipped = "".join(f"{v} {u} {c}\n" for (u, v), c in zip(g.edges, colors.tolist()))
    assert np.array_equal(read_coloring(flipped, g), colors)


def test_comments_and_blank_lines():
    g = read_graph("c hello\n\np edge 3 2\ne 0 1\nc mid\ne 1 2\n")
    assert (g.n, g.m) == (3, 2)


@pytest.mark.parametrize("text", [
    "e 0 1\n",
    "p edge 2 1\n",
    "p edge 2 1\ne 0 5\n",
    "p edge 2 1\ne 0 x\n",
    "p edge 2\n",
    "p edge 2 0\np edge 2 0\n",
    "p edge 2 1\nq 0 1\n",
    "",
])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        EdgeListFile.parse(text)


def test_parse_error_has_line():
    with pytest.raises(ParseError) as exc:
        EdgeListFile.parse("p edge 2 1\ne 0 9\n")
    assert exc.value.line == 2


def test_coloring_errors():
    g = new_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ParseError):
        ColoringFile.parse("0 1\n")
    with pytest.raises(ParseError):
        read_coloring("0 1 1\n", g)
    with pytest.raises(ParseError):
        read_coloring("0 1 1\n0 2 2\n", g)


# ----------------------------------------------------------------------
# commands

@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.edges"
    assert main(["gen", "--n", "300", "--seed", "4", "--style", "lattice", "-o", str(p)]) == 0
    return p


def test_color_verify(tmp_path, graph_file, capsys):
    out, tr = tmp_path / "g.col", tmp_path / "t.json"
    assert main(["color", str(graph_file), "-o", str(out), "--trace", str(tr)]) == EXIT_OK
    assert main(["verify", str(graph_file), str(out)]) == EXIT_OK
    assert main(["verify", str(out)]) == EXIT_OK
    assert json.loads(tr.read_text())["m"] == read_graph(graph_file.read_text()).m
    # strict mode on a planar input also succeeds
    assert main(["color", str(graph_file), "--strict-planar", "-o", str(out)]) == EXIT_OK


def test_verify_rejects(tmp_path, graph_file):
    out = tmp_path / "g.col"
    main(["color", str(graph_file), "-o", str(out)])
    lines = out.read_text().splitlines()
    u, v, _ = lines[0].split()
    bad = tmp_path / "bad.col"
    bad.write_text("\n".join([f"{u} {v} 9"] + lines[1:]) + "\n")
    assert main(["verify", str(graph_file), str(bad)]) == EXIT_VERIFY
    # reuse a neighbour's color
    g = read_graph(graph_file.read_text())
    e0 = 0
    x = g.endpoints(e0)[0]
    f = next(eid for _, eid in g.incident(x) if eid != e0)
    cols = [ln.split() for ln in lines]
    cols[e0][2] = cols[f][2]
    bad.write_text("".join(" ".join(c) + "\n" for c in cols))
    assert main(["verify", str(graph_file), str(bad)]) == EXIT_VERIFY
    # one line missing: an uncolored edge is not complete
    bad.write_text("\n".join(lines[:-1]) + "\n")
    assert main(["verify", str(graph_file), str(bad)]) == EXIT_INPUT


def test_input_errors(tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("p edge 2 1\ne 0 7\n")
    assert main(["color", str(p)]) == EXIT_INPUT
    p.write_text("p edge 10 9\n" + "".join(f"e 0 {i}\n" for i in range(1, 10)))
    assert main(["color", str(p)]) == EXIT_INPUT
    assert main(["stats", str(tmp_path / "missing.edges")]) == EXIT_INPUT
    big = tmp_path / "big.edges"
    main(["gen", "--n", "100", "-o", str(big)])
    assert main(["oracle", str(big)]) == EXIT_INPUT


def test_non_planar_exit_codes(tmp_path, capsys):
    p = tmp_path / "k9.edges"
    p.write_text(k9_text())
    assert main(["color", str(p), "--strict-planar"]) == EXIT_GUARANTEE
    assert main(["color", str(p), "-o", str(tmp_path / "k9.col")]) == EXIT_VERIFY


def test_stats_and_oracle(tmp_path, capsys):
    p = tmp_path / "s.edges"
    main(["gen", "--n", "12", "--seed", "1", "--style", "sparse", "-o", str(p)])
    capsys.readouterr()
    assert main(["stats", str(p)]) == EXIT_OK
    lines = dict(ln.split() for ln in capsys.readouterr().out.splitlines())
    assert float(lines["ratio"]) >= 1
    assert main(["oracle", str(p), "--max-colors", "8"]) == EXIT_OK
    assert main(["oracle", str(p), "--max-colors", "1"]) == EXIT_VERIFY


def test_bench_command(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--sizes", "200,400", "--seeds", "1", "-o", str(out)]) == EXIT_OK
    rows = out.read_text().splitlines()
    assert rows[0].startswith("n,mean_time,time_per_nlogn") and len(rows) == 3


def test_shell_pipeline():
    cmd = (f"{sys.executable} -m vizing8 gen --n 100 --seed 1 | "
           f"{sys.executable} -m vizing8 color | {sys.executable} -m vizing8 verify")
    r = subprocess.run(cmd, shell=True, capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert r.stdout.startswith("ok")
