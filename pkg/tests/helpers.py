"""Shared builders for the test suite: corpora, hand-made typed instances and
a hill climb that drives butterfly edges into the rarer types."""
from __future__ import annotations

import numpy as np

from vizing8 import color_graph, generate_planar
from vizing8.chain_index import lazy
from vizing8.classify import EdgeType, classify_edge
from vizing8.graph_core import PartialColoring, new_graph
from vizing8.reducible import find_butterfly, scan_reducible

STYLES = ("triangulation", "lattice", "sparse", "butterfly")


def corpus(sizes, seeds, styles=STYLES):
    for style in styles:
        for n in sizes:
            for s in seeds:
                yield style, n, s, generate_planar(n, s, style)


# ----------------------------------------------------------------------
# hand-made instances, one per type, with colors relabeled by `perm`

def _build(n, colored, e_pair, perm):
    pairs = [e_pair] + [(u, v) for u, v, _ in colored]
    g = new_graph(n, pairs)
    colors = [0] + [perm[c - 1] for _, _, c in colored]
    return g, PartialColoring.from_colors(g, colors)


def type_instance(tag: str, seed: int = 0):
    """(g, pc, EdgeType, e) satisfying the definition of `tag`; e is edge 0.

    Colors 1..4 of the construction are sent through a random permutation.
    """
    rng = np.random.default_rng(seed)
    perm = [int(c) for c in rng.permutation(8) + 1]
    p = lambda c: perm[c - 1]
    x, y = 0, 1
    if tag == "T1":
        # y - z colored a, so a is free only at x
        g, pc = _build(3, [(y, 2, 1)], (x, y), perm)
        return g, pc, EdgeType("T1", (p(1), p(2)), {"x": x, "y": y}, edge=0), 0
    if tag == "T2":
        z = 2
        g, pc = _build(3, [(x, z, 1), (y, z, 3)], (x, y), perm)
        return g, pc, EdgeType("T2", (p(1), p(2)), {"x": x, "y": y, "z": z}, c=p(3), edge=0), 0
    if tag == "T3":
        z, q = 2, 3
        g, pc = _build(4, [(x, q, 2), (q, y, 1), (x, z, 3)], (x, y), perm)
        return g, pc, EdgeType("T3", (p(1), p(2)), {"x": x, "y": y, "z": z}, c=p(3), edge=0), 0
    if tag == "T4":
        z, v, w, u = 2, 3, 4, 5
        g, pc = _build(6, [(x, v, 1), (v, w, 2), (w, u, 1), (u, x, 2), (z, v, 3)], (x, y), perm)
        return g, pc, EdgeType("T4", (p(1), p(2)), {"x": x, "y": y, "z": z, "v": v},
                               c=p(3), edge=0), 0
    if tag == "T5":
        z, v, q = 2, 3, 4
        g, pc = _build(5, [(x, q, 1), (q, y, 2), (x, v, 3), (z, v, 1)], (x, y), perm)
        return g, pc, EdgeType("T5", (p(1), p(2)), {"x": x, "y": y, "z": z, "v": v},
                               c=p(3), edge=0), 0
    if tag == "T6":
        z, v1, v2, r, q = 2, 3, 4, 5, 6
        g, pc = _build(7, [(x, v2, 1), (v2, y, 2), (z, v2, 3), (x, v1, 3), (z, v1, 1),
                           (v1, r, 4), (r, q, 3), (q, x, 4)], (x, y), perm)
        return g, pc, EdgeType("T6", (p(1), p(2), p(3), p(4)),
                               {"x": x, "y": y, "z": z, "v1": v1, "v2": v2}, edge=0), 0
    raise ValueError(tag)


# ----------------------------------------------------------------------
# hill climb towards "every (f,k)-chain from y ends at x"

def _y_blocked(g, pc, ci, x, y):
    f = min(pc.free_colors(x))
    if f not in pc.used_colors(y):
        return 0
    return sum(1 for k in pc.free_colors(y) if ci.has_endpoints(y, f, k, x, y))


def climb(g, pc, e, rng, steps=400, near_only=0.7):
    """Random chain flips near the B2 butterfly of the uncolored edge e that
    never decrease the number of blocked chains; yields (pc, ci, type)."""
    w = find_butterfly(g, e)
    near = sorted({w.x, w.y, w.z, *w.v, *g.neighbors(w.x), *g.neighbors(w.y)})
    ci = lazy(g, pc)
    score = _y_blocked(g, pc, ci, w.x, w.y)
    for _ in range(steps):
        q = pc.copy()
        v = int(rng.choice(near)) if rng.random() < near_only else int(rng.integers(g.n))
        a, b = (int(c) for c in rng.choice(np.arange(1, 9), 2, replace=False))
        q.kempe_from(v, a, b)
        cq = lazy(g, q)
        s = _y_blocked(g, q, cq, w.x, w.y)
        if s >= score:
            pc, ci, score = q, cq, s
            yield pc, ci, classify_edge(g, pc, ci, w)


def colored_butterfly_graph(n, seed):
    g = generate_planar(n, seed, "butterfly")
    pc, _ = color_graph(g)
    _, eb = scan_reducible(g)
    return g, pc, eb


def b2_edges(g, eb):
    return [e for e in eb if find_butterfly(g, e).kind == "B2"]
