"""Seeded generators of planar graphs with maximum degree at most 8.

Every generator draws from ``numpy.random.default_rng(seed)`` (PCG64) so a
corpus is reproducible from (style, n, seed).
"""
from __future__ import annotations

import heapq
import math

import numpy as np

from .graph_core import Graph, from_arrays

STYLES = ("triangulation", "lattice", "sparse", "butterfly")


def _dedupe(pairs: np.ndarray) -> np.ndarray:
    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    return np.unique(np.stack([lo, hi], axis=1), axis=0)


def cap_degrees(n: int, pairs: np.ndarray, maxdeg: int = 8) -> np.ndarray:
    """Delete edges until every degree is at most `maxdeg`.

    The vertex of highest degree loses the edge to its highest-degree
    neighbor; an edge is never removed if that would isolate a vertex.
    """
    m = pairs.shape[0]
    deg = np.bincount(pairs.ravel(), minlength=n)
    if m == 0 or deg.max() <= maxdeg:
        return pairs
    alive = np.ones(m, dtype=bool)
    ends = np.concatenate([pairs[:, 0], pairs[:, 1]])
    eids = np.concatenate([np.arange(m), np.arange(m)])
    order = np.argsort(ends, kind="stable")
    ends, eids = ends[order], eids[order]
    start = np.searchsorted(ends, np.arange(n + 1))
    deg = deg.tolist()
    heap = [(-deg[v], v) for v in np.flatnonzero(np.asarray(deg) > maxdeg).tolist()]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if deg[v] <= maxdeg:
            continue
        if -d != deg[v]:
            heapq.heappush(heap, (-deg[v], v))
            continue
        best, bdeg = -1, -1
        for e in eids[start[v]:start[v + 1]].tolist():
            if not alive[e]:
                continue
            w = int(pairs[e, 0] + pairs[e, 1] - v)
            if deg[w] > 1 and deg[w] > bdeg:
                best, bdeg = e, deg[w]
        if best < 0:
            continue
        alive[best] = False
        w = int(pairs[best, 0] + pairs[best, 1] - v)
        deg[v] -= 1
        deg[w] -= 1
        if deg[v] > maxdeg:
            heapq.heappush(heap, (-deg[v], v))
    return pairs[alive]


def _relabel(n: int, pairs: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    perm = rng.permutation(n)
    pairs = perm[pairs]
    return pairs[rng.permutation(pairs.shape[0])]


def _triangulation(n: int, rng: np.random.Generator) -> np.ndarray:
    from scipy.spatial import Delaunay

    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    s = tri.simplices
    pairs = np.concatenate([s[:, [0, 1]], s[:, [1, 2]], s[:, [0, 2]]])
    return cap_degrees(n, _dedupe(pairs))


def _lattice(n: int, rng: np.random.Generator) -> np.ndarray:
    c = max(2, math.ceil(math.sqrt(n)))
    idx = np.arange(n)
    i, j = idx // c, idx % c
    cand = []
    for di, dj in ((0, 1), (1, 0), (1, 1)):
        ok = (j + dj < c)
        k2 = (i + di) * c + (j + dj)
        ok &= k2 < n
        cand.append(np.stack([idx[ok], k2[ok]], axis=1))
    pairs = np.concatenate(cand)
    # perturb the boundary: drop some boundary edges that keep both ends non-isolated
    rows = (n + c - 1) // c
    bi = lambda k: (k // c == 0) | (k // c == rows - 1) | (k % c == 0) | (k % c == c - 1)
    onb = bi(pairs[:, 0]) & bi(pairs[:, 1])
    drop = onb & (rng.random(pairs.shape[0]) < 0.3)
    deg = np.bincount(pairs.ravel(), minlength=n)
    keep = np.ones(pairs.shape[0], dtype=bool)
    for e in np.flatnonzero(drop).tolist():
        u, v = pairs[e]
        if deg[u] > 1 and deg[v] > 1:
            keep[e] = False
            deg[u] -= 1
            deg[v] -= 1
    return pairs[keep]


def _sparse(n: int, rng: np.random.Generator) -> np.ndarray:
    # random stacked triangulation: each new vertex goes into a random face
    faces = [(0, 1, 2)]
    pairs = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, n):
        k = int(rng.integers(len(faces)))
        a, b, c = faces[k]
        faces[k] = (a, b, v)
        faces.append((b, c, v))
        faces.append((a, c, v))
        pairs += [(a, v), (b, v), (c, v)]
    pairs = cap_degrees(n, np.array(pairs, dtype=np.int64))
    deg = np.bincount(pairs.ravel(), minlength=n)
    target = int(2.5 * n)
    keep = np.ones(pairs.shape[0], dtype=bool)
    m = pairs.shape[0]
    for e in rng.permutation(pairs.shape[0]).tolist():
        if m <= target:
            break
        u, v = pairs[e]
        if deg[u] > 1 and deg[v] > 1:
            keep[e] = False
            deg[u] -= 1
            deg[v] -= 1
            m -= 1
    return pairs[keep]


def _butterfly(n: int, rng: np.random.Generator) -> tuple[np.ndarray, int]:
    """Triangular lattice with 3-vertices stacked into random faces.

    Faces are visited in random order and receive a new 3-vertex while their
    three corners have degree below 8.  Corners that end up with two stacked
    faces become 8-vertices; two faces sharing an edge at a corner give a B1
    butterfly, two faces sharing only the corner give a B2 one.
    """
    s = max(3, math.isqrt(int(n / 1.55)))
    lat = lambda i, j: i * s + j
    pairs = []
    for i in range(s):
        for j in range(s):
            if j + 1 < s:
                pairs.append((lat(i, j), lat(i, j + 1)))
            if i + 1 < s:
                pairs.append((lat(i, j), lat(i + 1, j)))
            if i + 1 < s and j + 1 < s:
                pairs.append((lat(i, j), lat(i + 1, j + 1)))
    tris = []
    for i in range(s - 1):
        for j in range(s - 1):
            tris.append((lat(i, j), lat(i + 1, j), lat(i + 1, j + 1)))
            tris.append((lat(i, j), lat(i, j + 1), lat(i + 1, j + 1)))
    deg = np.bincount(np.asarray(pairs).ravel(), minlength=s * s).tolist()
    nxt = s * s
    for k in rng.permutation(len(tris)).tolist():
        if nxt >= n:
            break
        t = tris[k]
        if all(deg[v] < 8 for v in t):
            for v in t:
                deg[v] += 1
            pairs += [(v, nxt) for v in t]
            nxt += 1
    return np.array(pairs, dtype=np.int64), nxt


def generate_planar(n: int, seed: int, style: str = "triangulation") -> Graph:
    """Planar graph without isolated vertices and with maximum degree <= 8.

    n < 2 is raised to 2 (a single edge), the smallest graph without an
    isolated vertex.  The butterfly style may return slightly fewer than n
    vertices when n does not fit its lattice.
    """
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; choose from {', '.join(STYLES)}")
    n = max(int(n), 2)
    rng = np.random.default_rng(seed)
    if n == 2:
        return from_arrays(2, np.array([[0, 1]]))
    if n < 4 or (style == "butterfly" and n < 20):
        style = "lattice" if style != "sparse" else style
    if style == "triangulation":
        pairs = _triangulation(n, rng)
    elif style == "lattice":
        pairs = _lattice(n, rng)
    elif style == "sparse":
        pairs = _sparse(n, rng)
    else:
        pairs, n = _butterfly(n, rng)
    return from_arrays(n, _relabel(n, pairs, rng))
