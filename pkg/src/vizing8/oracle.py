"""Independent correctness oracles.

Nothing here calls the kernel: the verifier, the chain walker, the exact
solver and the single-edge fan are plain Python over the graph's edge list.
"""
from __future__ import annotations

import numpy as np

from .graph_core import NCOLORS, Graph, PartialColoring

MAX_BRUTE_EDGES = 40


class TooLarge(ValueError):
    pass


def verify_coloring(g: Graph, pc: PartialColoring) -> bool:
    """True iff pc is a proper partial 8-edge-coloring with consistent masks."""
    if pc.color.shape[0] != g.m:
        return False
    seen: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for e in range(g.m):
        c = int(pc.color[e])
        if c == 0:
            continue
        if not 1 <= c <= NCOLORS:
            return False
        for v in (int(g.eu[e]), int(g.ev[e])):
            if c in seen[v]:
                return False
            seen[v][c] = e
    for v in range(g.n):
        mask = sum(1 << (c - 1) for c in seen[v])
        if int(pc.mask[v]) != mask:
            return False
        for c in range(1, NCOLORS + 1):
            if int(pc.at[8 * v + c - 1]) != seen[v].get(c, -1):
                return False
    return True


def _color_edge(g: Graph, pc: PartialColoring, v: int, c: int) -> int | None:
    for _, e in g.incident(v):
        if int(pc.color[e]) == c:
            return e
    return None


def naive_chain(g: Graph, pc: PartialColoring, v: int, a: int,
                b: int) -> tuple[bool, tuple[int, int], list[int]]:
    """Walk the (a,b)-chain through v.

    Returns (is_cycle, endpoints, edges).  For a path the edges run from the
    first endpoint to the second; for a cycle they start at v and endpoints
    is (v, v).
    """
    if a == b:
        raise ValueError("a and b must differ")

    def walk(start: int, first: int) -> tuple[list[int], int, bool]:
        edges, cur, want = [], start, first
        while True:
            e = _color_edge(g, pc, cur, want)
            if e is None or (edges and e == edges[0]):
                return edges, cur, e is not None
            edges.append(e)
            cur = int(g.eu[e] + g.ev[e] - cur)
            want = b if want == a else a

    fwd, end1, cyc = walk(v, a)
    if cyc:
        return True, (v, v), fwd
    back, end0, _ = walk(v, b)
    return False, (end0, end1), back[::-1] + fwd


def brute_chromatic_index(g: Graph, max_colors: int) -> np.ndarray | None:
    """A proper total edge coloring with colors 1..max_colors, or None.

    Backtracking over edges in descending order of endpoint degree sum, colors
    tried in ascending order, first edge fixed to color 1.  A partial
    assignment is abandoned as soon as some uncolored edge has no color left
    that is free at both of its ends.
    """
    if g.m > MAX_BRUTE_EDGES:
        raise TooLarge(f"{g.m} edges; exact search is limited to {MAX_BRUTE_EDGES}")
    if g.m == 0:
        return np.zeros(0, dtype=np.int64)
    if max_colors < g.max_degree:
        return None
    eu, ev = g.eu.tolist(), g.ev.tolist()
    deg = g.deg.tolist()
    order = sorted(range(g.m), key=lambda e: -(deg[eu[e]] + deg[ev[e]]))
    full = (1 << max_colors) - 1
    used = [0] * g.n
    color = [0] * g.m
    inc = [[e for _, e in g.incident(v)] for v in range(g.n)]

    def feasible(v: int) -> bool:
        for f in inc[v]:
            if not color[f] and not (full & ~(used[eu[f]] | used[ev[f]])):
                return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = eu[e], ev[e]
        free = full & ~(used[u] | used[v])
        top = 1 if i == 0 else max_colors
        for c in range(1, top + 1):
            bit = 1 << (c - 1)
            if not free & bit:
                continue
            color[e] = c
            used[u] |= bit
            used[v] |= bit
            if feasible(u) and feasible(v) and go(i + 1):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            color[e] = 0
        return False

    if not go(0):
        return None
    return np.asarray(color, dtype=np.int64)


# ----------------------------------------------------------------------
# single-edge fan

def _free(g: Graph, color: list[int], v: int) -> set[int]:
    return set(range(1, NCOLORS + 1)) - {color[e] for _, e in g.incident(v) if color[e]}


def _try_fan(g: Graph, color: list[int], e: int, x: int) -> bool:
    """Color e by rotating a multifan at x; True on success (color updated)."""
    y = int(g.eu[e] + g.ev[e] - x)
    at_x = {color[f]: (w, f) for w, f in g.incident(x) if color[f]}
    fx = _free(g, color, x)
    pred: dict[int, tuple[int, int] | None] = {y: None}
    queue = [y]
    while queue:
        f = queue.pop(0)
        ff = _free(g, color, f)
        common = ff & fx
        if common:
            c = min(common)
            # shift along the path y = p0 ... pk = f, then give x-f color c
            path = [f]
            while pred[path[-1]] is not None:
                path.append(pred[path[-1]][0])
            path.reverse()
            edge_of = {p: (g.edge_id(x, p)) for p in path}
            new = {edge_of[path[i]]: color[edge_of[path[i + 1]]] for i in range(len(path) - 1)}
            new[edge_of[f]] = c
            for ed, col in new.items():
                color[ed] = col
            return True
        for c in sorted(ff):
            if c in at_x:
                w, _ = at_x[c]
                if w not in pred:
                    pred[w] = (f, c)
                    queue.append(w)
    return False


def _flip(g: Graph, color: list[int], v: int, a: int, b: int) -> list[int]:
    pc = PartialColoring.from_colors(g, color)
    _, _, edges = naive_chain(g, pc, v, a, b)
    for f in edges:
        color[f] = b if color[f] == a else a
    return edges


def single_edge_fan(g: Graph, pc: PartialColoring, e: int, x: int) -> PartialColoring:
    """Color the x-weak edge e with a multifan at x and at most one chain flip.

    Returns a new coloring; raises FanFailure when no multifan rotation,
    alone or after one chain flip, colors e.
    """
    from .reduce import FanFailure

    if pc.color_of(e) is not None:
        raise ValueError(f"edge {e} is already colored")
    color = pc.color.astype(np.int64).tolist()
    if not _try_fan(g, color, e, x):
        y = int(g.eu[e] + g.ev[e] - x)
        done = False
        for a in sorted(_free(g, color, x)):
            fan = [y] + [w for w, _ in g.incident(x) if w != y]
            for f in fan:
                for b in sorted(_free(g, color, f) - {a}):
                    trial = list(color)
                    _flip(g, trial, f, a, b)
                    if _try_fan(g, trial, e, x):
                        color, done = trial, True
                        break
                if done:
                    break
            if done:
                break
        if not done:
            raise FanFailure(f"edge {e}: no fan rotation or single chain flip colors it")
    out = PartialColoring.from_colors(g, color)
    out.version = pc.version + 1
    return out
