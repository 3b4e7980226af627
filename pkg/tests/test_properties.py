"""Randomized invariants over generated graphs and colorings."""
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from vizing8 import color_graph, generate_planar
from vizing8.chain_index import build, lazy
from vizing8.io import EdgeListFile, read_coloring, read_graph, write_coloring
from vizing8.oracle import naive_chain, verify_coloring
from vizing8.reducible import reducible_stats

STYLE = st.sampled_from(["triangulation", "lattice", "sparse", "butterfly"])
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(n=st.integers(2, 400), seed=st.integers(0, 2 ** 31), style=STYLE)
def test_driver_colors_properly(n, seed, style):
    g = generate_planar(n, seed, style)
    pc, trace = color_graph(g, debug=True)
    assert pc.is_total() and verify_coloring(g, pc)
    assert int(pc.color.max()) <= 8
    assert reducible_stats(g).ratio >= 1


@SETTINGS
@given(n=st.integers(4, 150), seed=st.integers(0, 2 ** 31), frac=st.floats(0, 1),
       flips=st.integers(0, 30))
def test_kempe_flips_keep_properness(n, seed, frac, flips):
    g = generate_planar(n, seed, "sparse")
    pc, _ = color_graph(g)
    rng = np.random.default_rng(seed)
    for e in np.flatnonzero(rng.random(g.m) < frac).tolist():
        pc.uncolor(e)
    for _ in range(flips):
        a, b = (int(c) for c in rng.choice(np.arange(1, 9), 2, replace=False))
        pc.kempe_from(int(rng.integers(g.n)), a, b)
    assert verify_coloring(g, pc)
    ci, cl = build(g, pc), lazy(g, pc)
    for _ in range(50):
        v = int(rng.integers(g.n))
        a, b = (int(c) for c in rng.choice(np.arange(1, 9), 2, replace=False))
        cyc, ends, _ = naive_chain(g, pc, v, a, b)
        assert ci.is_cycle(v, a, b) == cl.is_cycle(v, a, b) == cyc
        if not cyc:
            assert set(ci.endpoints(v, a, b)) == set(cl.endpoints(v, a, b)) == set(ends)


@SETTINGS
@given(n=st.integers(2, 200), seed=st.integers(0, 2 ** 31), style=STYLE)
def test_file_round_trips(n, seed, style):
    import io
    g = generate_planar(n, seed, style)
    h = read_graph(EdgeListFile.from_graph(g).format())
    assert h.edges == g.edges and h.n == g.n
    colors = np.random.default_rng(seed).integers(1, 9, g.m)
    buf = io.StringIO()
    write_coloring(g, colors, buf)
    assert np.array_equal(read_coloring(buf.getvalue(), g), colors)
