"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line straight to the
terminal (also under ``pytest -v`` capture).  Run this file as a script to get
the lines without pytest.
"""
from __future__ import annotations

import math
import sys
import time
from collections import Counter
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import STYLES, b2_edges, climb, colored_butterfly_graph, corpus, type_instance

from vizing8 import color_graph, generate_planar
from vizing8.chain_index import build, lazy
from vizing8.classify import EdgeType, classify_edge, verify_type
from vizing8.cli import main as cli_main
from vizing8.driver import DEPTH_CONSTANT
from vizing8.graph_core import PartialColoring
from vizing8.oracle import brute_chromatic_index, naive_chain, verify_coloring
from vizing8.reduce import (FILTER_BUTTERFLY, K_BUTTERFLY, K_WEAK, eliminate_type2,
                            filter_4_independent, plan_reduction, execute_plans, prepare_batch)
from vizing8.reducible import find_butterfly, reducible_stats
from vizing8.bench import doubling_ratios, run_bench


@pytest.fixture
def report(capsys):
    def _report(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    return _report


# ----------------------------------------------------------------------

def test_c1_end_to_end(report, tmp_path):
    sizes = (10, 30, 100, 300, 1000, 3000, 10000)
    count = bad = 0
    worst = 0
    for style, n, s, g in corpus(sizes, range(36)):
        src, out = tmp_path / "g.edges", tmp_path / "g.col"
        with open(src, "w") as f:
            f.write(f"p edge {g.n} {g.m}\n")
            f.writelines(f"e {u} {v}\n" for u, v in zip(g.eu.tolist(), g.ev.tolist()))
        rc1 = cli_main(["color", str(src), "-o", str(out)])
        rc2 = cli_main(["verify", str(src), str(out)])
        cols = np.loadtxt(out, dtype=np.int64, ndmin=2)[:, 2] if g.m else np.zeros(0)
        ncol = int(np.unique(cols).size)
        worst = max(worst, int(cols.max()) if cols.size else 0)
        count += 1
        bad += (rc1 != 0 or rc2 != 0 or ncol > 8)
    ok = count >= 1000 and bad == 0 and worst <= 8
    report(1, ok, f"{count} graphs through color+verify, {bad} failures, max color {worst}")
    assert ok


def test_c2_class1_oracle(report):
    count = 0
    for style in STYLES:
        for s in range(70):
            g = generate_planar(6 + s % 12, 1000 + s, style)
            if g.m > 40:
                continue
            brute = brute_chromatic_index(g, 8)
            assert brute is not None
            assert verify_coloring(g, PartialColoring.from_colors(g, brute))
            pc, _ = color_graph(g)
            assert verify_coloring(g, pc) and pc.is_total() and pc.colors_used() <= 8
            count += 1
    ok = count >= 200
    report(2, ok, f"{count} graphs with <= 40 edges: exact search and driver both 8-color")
    assert ok


def test_c3_reducible_bound(report):
    worst = math.inf
    count = 0
    for style, n, s, g in corpus((10, 100, 1000, 10000), range(5)):
        st = reducible_stats(g)
        worst = min(worst, st.ratio)
        count += 1
        assert st.reducible * 1460 >= st.n
    timings = []
    for style in STYLES:
        g = generate_planar(100_000, 0, style)
        t0 = time.perf_counter()
        st = reducible_stats(g)
        timings.append(time.perf_counter() - t0)
        worst = min(worst, st.ratio)
        count += 1
        assert st.reducible * 1460 >= st.n
    ok = worst >= 1
    report(3, ok, f"{count} graphs, min |E_w u E_b|*1460/n = {float(worst):.1f}, "
                  f"scan of 1e5 vertices {max(timings):.2f}s")
    assert ok
    assert max(timings) < 1.0


def _partial(g, rng):
    pc, _ = color_graph(g)
    for e in np.flatnonzero(rng.random(g.m) < rng.uniform(0, 0.6)).tolist():
        pc.uncolor(e)
    for _ in range(int(rng.integers(0, 20))):
        a, b = (int(c) for c in rng.choice(np.arange(1, 9), 2, replace=False))
        pc.kempe_from(int(rng.integers(g.n)), a, b)
    return pc


def test_c4_chain_index_oracle(report):
    rng = np.random.default_rng(4)
    pairs = mismatches = records = 0
    for i in range(100):
        g = generate_planar(int(rng.integers(10, 201)), i, STYLES[i % 4])
        pc = _partial(g, rng)
        ci = build(g, pc)
        for v in range(g.n):
            for a in range(1, 9):
                for b in range(a + 1, 9):
                    cyc, ends, edges = naive_chain(g, pc, v, a, b)
                    records += 1
                    if cyc != ci.is_cycle(v, a, b):
                        mismatches += 1
                    elif not cyc and (set(ends) != set(ci.endpoints(v, a, b))
                                      or not ci.same_chain(v, ends[0], a, b)):
                        mismatches += 1
        pairs += 1
    ok = pairs >= 100 and mismatches == 0
    report(4, ok, f"{pairs} (graph, coloring) pairs, {records} records, {mismatches} mismatches")
    assert ok


def test_c5_type_soundness(report):
    rng = np.random.default_rng(5)
    tags = Counter()
    bad = 0
    # perturbed neighbourhoods of every butterfly-like edge
    for s in range(8):
        g, base, eb = colored_butterfly_graph(600, s)
        for _ in range(3):
            for e in eb:
                w = find_butterfly(g, e)
                pc = base.copy()
                pc.uncolor(e)
                near = [w.x, w.y, *g.neighbors(w.x), *g.neighbors(w.y)]
                for _ in range(int(rng.integers(1, 4))):
                    a, b = (int(c) for c in rng.choice(np.arange(1, 9), 2, replace=False))
                    pc.kempe_from(int(rng.choice(near)), a, b)
                ci = lazy(g, pc)
                et = classify_edge(g, pc, ci, w)
                tags[et.tag] += 1
                bad += not verify_type(g, pc, ci, et, e)
    # hill-climbed states where every chain from y returns to x
    for s in range(3):
        g, base, eb = colored_butterfly_graph(300, 10 + s)
        for e in b2_edges(g, eb)[:8]:
            pc = base.copy()
            pc.uncolor(e)
            for pc2, ci, et in climb(g, pc, e, rng, steps=1500):
                tags[et.tag] += 1
                bad += not verify_type(g, pc2, ci, et, e)
    # hand-made instances of every butterfly type, checked and executed
    for tag in ("T1", "T3", "T4", "T5", "T6"):
        for s in range(20):
            g, pc, et, e = type_instance(tag, s)
            ci = lazy(g, pc)
            tags[tag + "*"] += 1
            if not verify_type(g, pc, ci, et, e):
                bad += 1
                continue
            execute_plans(g, pc, [plan_reduction(g, pc, ci, et, e)])
            bad += not (pc.is_total() and verify_coloring(g, pc))
    total = sum(v for k, v in tags.items() if not k.endswith("*"))
    ok = total >= 10_000 and bad == 0
    report(5, ok, f"{total} classified butterfly edges, {bad} unsound; "
                  f"types {dict(sorted(tags.items()))} (* = hand-made)")
    assert ok


def _t1_view(row_type: EdgeType, e: int) -> EdgeType:
    a, b = row_type.colors
    return EdgeType("T1", (a, b), {"x": row_type.witness["x"], "y": row_type.witness["y"]}, edge=e)


def test_c6_type2_elimination(report):
    rng = np.random.default_rng(6)
    batches = edges = bad = climbed = 0
    # disjoint unions of gadgets sharing one color pair
    from vizing8.graph_core import new_graph
    for k in range(1, 21):
        perm = [int(c) for c in rng.permutation(8) + 1]
        pairs, colors = [], []
        for i in range(k):
            x, y, z = 3 * i, 3 * i + 1, 3 * i + 2
            pairs += [(x, y), (x, z), (y, z)]
            colors += [0, perm[0], perm[2]]
        g = new_graph(3 * k, pairs)
        pc = PartialColoring.from_colors(g, colors)
        batch = [3 * i for i in range(k)]
        ets = [EdgeType("T2", (perm[0], perm[1]), {"x": 3 * i, "y": 3 * i + 1, "z": 3 * i + 2},
                        c=perm[2], edge=3 * i) for i in range(k)]
        bad += _eliminate_and_check(g, pc, batch, ets)
        batches += 1
        edges += k
    # batches on butterfly graphs: uncolor far-apart B2 edges, climb each into type 2
    for s in range(12):
        g, pc, eb = colored_butterfly_graph(400, 20 + s)
        picked = filter_4_independent(g, b2_edges(g, eb))[:6]
        for e in picked:
            pc.uncolor(e)
        for e in picked:
            for pc2, _, et in climb(g, pc, e, rng, steps=1500):
                pc = pc2
                if et.tag == "T2":
                    break
        ci = lazy(g, pc)
        typed = [(e, classify_edge(g, pc, ci, find_butterfly(g, e))) for e in picked]
        groups = Counter(et.colors for _, et in typed if et.tag == "T2")
        if not groups:
            continue
        ab = groups.most_common(1)[0][0]
        sel = [(e, et) for e, et in typed if et.tag == "T2" and et.colors == ab]
        bad += _eliminate_and_check(g, pc, [e for e, _ in sel], [et for _, et in sel])
        batches += 1
        climbed += 1
        edges += len(sel)
    # single edges, eliminated as soon as the climb reaches type 2
    for s in range(4):
        g, base, eb = colored_butterfly_graph(300, 40 + s)
        for e in b2_edges(g, eb)[:10]:
            pc = base.copy()
            pc.uncolor(e)
            for pc2, _, et in climb(g, pc, e, rng, steps=1500):
                if et.tag == "T2":
                    bad += _eliminate_and_check(g, pc2.copy(), [e], [et])
                    batches += 1
                    climbed += 1
                    edges += 1
                    break
    ok = bad == 0 and batches >= 20 and climbed > 0
    report(6, ok, f"{batches} type-2 batches ({edges} edges, {climbed} batches on butterfly "
                  f"graphs) eliminated, {bad} edges not type 1 after")
    assert ok


def _eliminate_and_check(g, pc, batch, ets) -> int:
    before = set(np.flatnonzero(pc.color).tolist())
    ab = ets[0].colors
    eliminate_type2(g, pc, batch, *ab)
    after = set(np.flatnonzero(pc.color).tolist())
    ci = lazy(g, pc)
    bad = sum(not verify_type(g, pc, ci, _t1_view(et, e), e) for e, et in zip(batch, ets))
    return bad + (before != after) + (not verify_coloring(g, pc))


def test_c7_batch_coherence(report):
    stats = Counter()

    def hook(w, edges, weak):
        Core = type(w.core)

        def fresh():
            arrs = (w.color.copy(), w.mask.copy(), w.at.copy())
            return Core(w.wg.eu, w.wg.ev, w.deg.copy(), w.nbr.copy(), w.inc.copy(), *arrs), arrs

        ca, (col_a, _, _) = fresh()
        pa = prepare_batch(ca, edges, weak)
        st, _ = ca.execute(pa.plans, True)
        stats["coherence_fired"] += st != 0
        cb, (col_b, _, _) = fresh()
        pb = prepare_batch(cb, edges, weak)
        for i in range(pb.rows.shape[0]):
            cb.index_reset(True)
            one = np.zeros((1, pb.plans.shape[1]), dtype=np.int32)
            st, _ = cb.plans(np.ascontiguousarray(pb.rows[i:i + 1]), one)
            st2, _ = cb.execute(one, True)
            stats["sequential_error"] += (st != 0) + (st2 != 0)
        same = set(np.flatnonzero(col_a).tolist()) == set(np.flatnonzero(col_b).tolist())
        stats["batches"] += 1
        stats["set_mismatch"] += not same
        stats["coloring_mismatch"] += not np.array_equal(col_a, col_b)
        stats[pa.tag] += 1

    for style, n, s, g in corpus((200, 1000), range(5)):
        color_graph(g, debug=True, on_batch=hook)
    ok = (stats["batches"] >= 500 and stats["set_mismatch"] == 0
          and stats["coherence_fired"] == 0 and stats["sequential_error"] == 0)
    report(7, ok, f"{dict(stats)}")
    assert ok


def test_c8_filter_constant(report):
    calls = bad = 0
    worst = math.inf
    for style, n, s, g in corpus((100, 1000, 10000), range(4)):
        _, tr = color_graph(g)
        for lv in tr.levels:
            for r in lv.rounds:
                if r.filter_in:
                    calls += 1
                    worst = min(worst, r.filter_out / r.filter_in)
                    bad += r.filter_out < math.ceil(r.filter_in / FILTER_BUTTERFLY)
    ok = bad == 0 and calls > 0
    report(8, ok, f"{calls} filter invocations, {bad} below ceil(in/33), "
                  f"min out/in {worst:.3f}")
    assert ok


def test_c9_geometric_progress(report):
    rounds = bad = 0
    worst_c = 0.0
    for style, n, s, g in corpus((10, 100, 1000, 10000, 50000), range(3)):
        _, tr = color_graph(g)
        for lv in tr.levels:
            k = K_WEAK if lv.kind == "weak" else K_BUTTERFLY
            for r in lv.rounds:
                rounds += 1
                bad += r.colored * k < r.uncolored
        c = tr.depth / math.log2(max(g.n, 2))
        worst_c = max(worst_c, c)
    ok = bad == 0 and worst_c <= DEPTH_CONSTANT
    report(9, ok, f"{rounds} rounds, {bad} below 1/K; max depth/log2 n = {worst_c:.2f} "
                  f"(c = {DEPTH_CONSTANT})")
    assert ok


def test_c10_scaling(report):
    rows = run_bench([100_000, 200_000, 400_000, 800_000], seeds=5, style="triangulation")
    ratios = doubling_ratios(rows)
    ok = len(ratios) == 3 and all(r <= 2.6 for _, r in ratios)
    detail = ", ".join(f"t({2 * n})/t({n})={r:.2f}" for n, r in ratios)
    means = ", ".join(f"{r.n}:{r.mean_time:.2f}s" for r in rows)
    report(10, ok, f"{detail}; means {means}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", *sys.argv[1:]]))
