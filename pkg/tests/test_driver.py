import json
import math

import numpy as np
import pytest

from vizing8 import generate_planar
from vizing8.driver import (DEPTH_CONSTANT, GuaranteeViolation, NoReducibleEdges,
                            ReducibleBoundWarning, color_graph, color_graph_with_fallback,
                            depth_constant)
from vizing8.graph_core import new_graph
from vizing8.oracle import verify_coloring


def k9_copies(k, pendant=False):
    pairs = []
    for c in range(k):
        o = 9 * c
        pairs += [(o + i, o + j) for i in range(9) for j in range(i + 1, 9)]
    n = 9 * k
    if pendant:
        pairs.append((n, n + 1))
        n += 2
    return new_graph(n, pairs)


@pytest.mark.parametrize("g", [new_graph(0, []), new_graph(3, []), new_graph(2, [(0, 1)]),
                               new_graph(9, [(0, i) for i in range(1, 9)])])
def test_trivial_graphs(g):
    pc, trace = color_graph(g)
    assert pc.is_total() and verify_coloring(g, pc)
    assert trace.n == g.n and trace.m == g.m


def test_star_uses_eight_colors():
    g = new_graph(9, [(0, i) for i in range(1, 9)])
    pc, _ = color_graph(g)
    assert sorted(pc.color.tolist()) == list(range(1, 9))


def test_trace_json_keys():
    g = generate_planar(2000, 0, "triangulation")
    _, trace = color_graph(g, debug=True)
    d = json.loads(trace.to_json())
    for key in ("n", "m", "backend", "levels", "total_time", "bound_warnings", "fallback",
                "prng", "depth", "k_weak", "k_butterfly"):
        assert key in d
    lv = d["levels"][0]
    for key in ("n", "m", "weak", "butterfly", "selected", "kind", "rounds", "peel_time",
                "wall_time"):
        assert key in lv
    rd = lv["rounds"][0]
    for key in ("uncolored", "colored", "type", "colors", "recolored", "eliminated",
                "filter_in", "filter_out"):
        assert key in rd
    assert d["depth"] == len(d["levels"]) and d["fallback"] is None
    assert sum(lv["selected"] for lv in d["levels"]) == g.m
    assert depth_constant(trace) <= DEPTH_CONSTANT


def test_levels_shrink():
    g = generate_planar(3000, 1, "butterfly")
    _, trace = color_graph(g)
    ms = [lv.m for lv in trace.levels]
    assert ms == sorted(ms, reverse=True) and len(set(ms)) == len(ms)
    assert trace.depth <= DEPTH_CONSTANT * math.log2(g.n)


def test_k9_has_no_reducible_edges():
    g = k9_copies(1)
    with pytest.raises(NoReducibleEdges) as exc:
        color_graph(g)
    assert sorted(exc.value.active_edges.tolist()) == list(range(36))


def test_fallback_flags_ninth_color():
    res = color_graph_with_fallback(k9_copies(1))
    assert res.flagged and res.pc is None and res.num_colors == 9
    g = k9_copies(1)
    u, v = np.array(g.edges).T
    for c in range(1, 10):
        sel = res.colors == c
        assert np.unique(np.concatenate([u[sel], v[sel]])).size == 2 * sel.sum()


def test_fallback_is_plain_run_on_planar():
    g = generate_planar(500, 3, "lattice")
    res = color_graph_with_fallback(g)
    assert res.flagged is None and res.num_colors <= 8 and verify_coloring(g, res.pc)


def test_strict_mode_guarantee():
    g = k9_copies(325, pendant=True)
    with pytest.raises(GuaranteeViolation):
        color_graph(g, strict_planar=True)
    with pytest.warns(ReducibleBoundWarning):
        with pytest.raises(NoReducibleEdges):
            color_graph(g)


def test_rejects_high_degree():
    class Fake:
        n, max_degree = 1, 9
    with pytest.raises(ValueError):
        color_graph(Fake())


def test_deterministic():
    g = generate_planar(1500, 7, "sparse")
    a, _ = color_graph(g)
    b, _ = color_graph(g)
    assert np.array_equal(a.color, b.color)
