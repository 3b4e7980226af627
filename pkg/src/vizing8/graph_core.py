"""Bounded-degree simple graphs and partial 8-edge-colorings.

Edges have dense ids in construction order.  Adjacency is stored in eight
slots per vertex so every kernel can address it with flat arrays.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._kernels import core as _k

MAXDEG = 8
NCOLORS = 8
ALL_COLORS = frozenset(range(1, NCOLORS + 1))


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class DegreeExceeded(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has degree > {MAXDEG}")
        self.vertex = vertex


class ColoringError(ValueError):
    pass


class AlreadyColored(ColoringError):
    pass


class Uncolored(ColoringError):
    pass


class ColorConflict(ColoringError):
    def __init__(self, vertex: int, color: int):
        super().__init__(f"color {color} already used at vertex {vertex}")
        self.vertex = vertex
        self.color = color


class Graph:
    """Immutable simple graph with maximum degree at most 8."""

    __slots__ = ("n", "m", "eu", "ev", "deg", "nbr", "inc", "_index", "_kc")

    def __init__(self, n: int, eu: np.ndarray, ev: np.ndarray, deg: np.ndarray,
                 nbr: np.ndarray, inc: np.ndarray):
        self.n = int(n)
        self.m = int(eu.shape[0])
        self.eu = eu
        self.ev = ev
        self.deg = deg
        self.nbr = nbr
        self.inc = inc
        self._index: dict[tuple[int, int], int] | None = None
        self._kc = None

    def _core(self):
        # kernel view with an empty coloring, for coloring-independent queries
        if self._kc is None:
            self._kc = _k.Core(self.eu, self.ev, self.deg, self.nbr, self.inc,
                               np.zeros(self.m, dtype=np.int8),
                               np.zeros(self.n, dtype=np.uint8),
                               np.full(8 * self.n, -1, dtype=np.int32))
        return self._kc

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.eu.tolist(), self.ev.tolist()))

    @property
    def degrees(self) -> list[int]:
        return self.deg.tolist()

    @property
    def max_degree(self) -> int:
        return int(self.deg.max()) if self.n else 0

    def neighbors(self, v: int) -> list[int]:
        return self.nbr[8 * v: 8 * v + self.deg[v]].tolist()

    def incident(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, edge id) pairs at v."""
        s = slice(8 * v, 8 * v + self.deg[v])
        return list(zip(self.nbr[s].tolist(), self.inc[s].tolist()))

    @property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        return [self.incident(v) for v in range(self.n)]

    def edge_id(self, u: int, v: int) -> int | None:
        if self._index is None:
            self._index = {}
            for e, (a, b) in enumerate(self.edges):
                self._index[(a, b)] = e
                self._index[(b, a)] = e
        return self._index.get((u, v))

    def endpoints(self, e: int) -> tuple[int, int]:
        return int(self.eu[e]), int(self.ev[e])

    def isolated(self) -> list[int]:
        return np.flatnonzero(self.deg == 0).tolist()

    def subgraph_without(self, removed: Iterable[int]) -> tuple["Graph", np.ndarray, np.ndarray]:
        """Graph minus the given edges and any vertex left isolated.

        Returns (subgraph, vertex map new->old, edge map new->old).
        """
        keep = np.ones(self.m, dtype=bool)
        keep[np.fromiter(removed, dtype=np.int64)] = False
        emap = np.flatnonzero(keep)
        used = np.zeros(self.n, dtype=bool)
        used[self.eu[emap]] = True
        used[self.ev[emap]] = True
        vmap = np.flatnonzero(used)
        inv = np.full(self.n, -1, dtype=np.int64)
        inv[vmap] = np.arange(vmap.size)
        pairs = np.stack([inv[self.eu[emap]], inv[self.ev[emap]]], axis=1)
        return from_arrays(int(vmap.size), pairs), vmap, emap

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def from_arrays(n: int, pairs: np.ndarray) -> Graph:
    """Build a graph from an (m, 2) integer array, validating every edge."""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    m = pairs.shape[0]
    if m and (pairs.min() < 0 or pairs.max() >= n):
        bad = int(pairs[(pairs < 0) | (pairs >= n)][0])
        raise GraphError(f"endpoint {bad} outside [0, {n})")
    u, v = pairs[:, 0], pairs[:, 1]
    loops = np.flatnonzero(u == v)
    if loops.size:
        raise SelfLoop(f"self-loop at vertex {int(u[loops[0]])}")
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    key = lo * max(n, 1) + hi
    if np.unique(key).size != m:
        _, first = np.unique(key, return_index=True)
        dup = np.setdiff1d(np.arange(m), first)[0]
        raise ParallelEdge(f"parallel edge {int(u[dup])}-{int(v[dup])}")
    deg = np.bincount(np.concatenate([u, v]), minlength=n).astype(np.int32)
    if n and deg.max() > MAXDEG:
        raise DegreeExceeded(int(np.argmax(deg > MAXDEG)))
    nbr = np.full(8 * n, -1, dtype=np.int32)
    inc = np.full(8 * n, -1, dtype=np.int32)
    ends = np.concatenate([u, v])
    others = np.concatenate([v, u])
    eids = np.concatenate([np.arange(m), np.arange(m)])
    order = np.argsort(ends, kind="stable")
    ends, others, eids = ends[order], others[order], eids[order]
    starts = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(ends, minlength=n), out=starts[1:])
    rank = np.arange(ends.size) - starts[ends]
    slot = 8 * ends + rank
    nbr[slot] = others
    inc[slot] = eids
    return Graph(n, u.astype(np.int32), v.astype(np.int32), deg, nbr, inc)


def new_graph(n: int, edge_pairs: Sequence[tuple[int, int]]) -> Graph:
    """Validated graph on vertices 0..n-1.

    Raises SelfLoop, ParallelEdge or DegreeExceeded on invalid input.
    """
    pairs = np.array(list(edge_pairs), dtype=np.int64).reshape(-1, 2)
    return from_arrays(n, pairs)


class PartialColoring:
    """Per-edge colors 1..8 (0 = uncolored) with per-vertex color masks.

    ``version`` increases on every mutation so that chain indexes can detect
    stale use.
    """

    def __init__(self, g: Graph, color: np.ndarray | None = None,
                 mask: np.ndarray | None = None, at: np.ndarray | None = None):
        self.g = g
        if color is None:
            self.color = np.zeros(g.m, dtype=np.int8)
            self.mask = np.zeros(g.n, dtype=np.uint8)
            self.at = np.full(8 * g.n, -1, dtype=np.int32)
        else:
            self.color, self.mask, self.at = color, mask, at
        self.version = 0
        self._kc = None

    @classmethod
    def from_colors(cls, g: Graph, colors: Sequence[int] | np.ndarray) -> "PartialColoring":
        """Build from a per-edge color list; raises ColorConflict if improper."""
        pc = cls(g)
        for e, c in enumerate(np.asarray(colors, dtype=np.int64).tolist()):
            if c:
                pc.assign(e, c)
        pc.version = 0
        return pc

    def copy(self) -> "PartialColoring":
        pc = PartialColoring(self.g, self.color.copy(), self.mask.copy(), self.at.copy())
        pc.version = self.version
        return pc

    def _core(self):
        if self._kc is None:
            g = self.g
            self._kc = _k.Core(g.eu, g.ev, g.deg, g.nbr, g.inc, self.color, self.mask, self.at)
        return self._kc

    # queries
    def color_of(self, e: int) -> int | None:
        c = int(self.color[e])
        return c or None

    def used_mask(self, v: int) -> int:
        return int(self.mask[v])

    def free_mask(self, v: int) -> int:
        return 0xFF ^ int(self.mask[v])

    def free_colors(self, v: int) -> frozenset[int]:
        fm = self.free_mask(v)
        return frozenset(c for c in range(1, 9) if fm >> (c - 1) & 1)

    def used_colors(self, v: int) -> frozenset[int]:
        return ALL_COLORS - self.free_colors(v)

    def edge_of_color(self, v: int, c: int) -> int | None:
        e = int(self.at[8 * v + c - 1])
        return None if e < 0 else e

    def num_colored(self) -> int:
        return int(np.count_nonzero(self.color))

    def is_total(self) -> bool:
        return bool(np.all(self.color > 0))

    def colors_used(self) -> int:
        return int(np.unique(self.color[self.color > 0]).size)

    # primitive updates; no validation
    def _put(self, e: int, c: int) -> None:
        u, v = int(self.g.eu[e]), int(self.g.ev[e])
        self.color[e] = c
        self.mask[u] |= 1 << (c - 1)
        self.mask[v] |= 1 << (c - 1)
        self.at[8 * u + c - 1] = e
        self.at[8 * v + c - 1] = e

    def _drop(self, e: int) -> int:
        c = int(self.color[e])
        if c:
            u, v = int(self.g.eu[e]), int(self.g.ev[e])
            self.mask[u] &= 0xFF ^ (1 << (c - 1))
            self.mask[v] &= 0xFF ^ (1 << (c - 1))
            self.at[8 * u + c - 1] = -1
            self.at[8 * v + c - 1] = -1
            self.color[e] = 0
        return c

    def _check(self, e: int, c: int) -> None:
        if not 1 <= c <= NCOLORS:
            raise ColoringError(f"color {c} outside 1..{NCOLORS}")
        for w in self.g.endpoints(e):
            if self.mask[w] >> (c - 1) & 1:
                raise ColorConflict(w, c)

    # validated operations
    def assign(self, e: int, c: int) -> None:
        if self.color[e]:
            raise AlreadyColored(f"edge {e} already has color {int(self.color[e])}")
        self._check(e, c)
        self._put(e, c)
        self.version += 1

    def uncolor(self, e: int) -> int:
        c = self._drop(e)
        self.version += 1
        return c

    def recolor(self, e: int, c: int) -> None:
        old = self._drop(e)
        try:
            self._check(e, c)
        except ColoringError:
            if old:
                self._put(e, old)
            raise
        self._put(e, c)
        self.version += 1

    def swap_colors(self, e1: int, e2: int) -> None:
        c1, c2 = int(self.color[e1]), int(self.color[e2])
        if not c1 or not c2:
            raise Uncolored(f"edge {e1 if not c1 else e2} is uncolored")
        self._drop(e1)
        self._drop(e2)
        try:
            self._check(e1, c2)
            self._put(e1, c2)
            self._check(e2, c1)
        except ColoringError:
            self._drop(e1)
            self._put(e1, c1)
            self._put(e2, c2)
            raise
        self._put(e2, c1)
        self.version += 1

    def kempe_from(self, v: int, a: int, b: int) -> list[int]:
        """Swap a and b along the (a,b)-chain through v; returns its edges in walk order."""
        if a == b:
            raise ValueError("a kempe chain needs two distinct colors")
        edges = self._core().kempe(v, a, b)
        self.version += 1
        return edges.tolist()

    def is_proper(self) -> bool:
        """Full scan of properness and mask consistency."""
        g = self.g
        colored = np.flatnonzero(self.color)
        c = self.color[colored].astype(np.int64)
        bits = np.zeros(g.n, dtype=np.int64)
        ends = np.concatenate([g.eu[colored], g.ev[colored]])
        cc = np.concatenate([c, c])
        keys = ends.astype(np.int64) * 8 + cc - 1
        if np.unique(keys).size != keys.size:
            return False
        np.bitwise_or.at(bits, ends, 1 << (cc - 1))
        if not np.array_equal(bits, self.mask.astype(np.int64)):
            return False
        at = np.full(8 * g.n, -1, dtype=np.int64)
        at[keys] = np.concatenate([colored, colored])
        return bool(np.array_equal(at, self.at))

    def __repr__(self) -> str:
        return f"PartialColoring(colored={self.num_colored()}/{self.g.m})"


def new_coloring(g: Graph) -> PartialColoring:
    return PartialColoring(g)


def free_colors(pc: PartialColoring, v: int) -> frozenset[int]:
    return pc.free_colors(v)


def assign(pc: PartialColoring, e: int, c: int) -> PartialColoring:
    pc.assign(e, c)
    return pc


def swap_colors(pc: PartialColoring, e1: int, e2: int) -> PartialColoring:
    pc.swap_colors(e1, e2)
    return pc


def kempe_from(pc: PartialColoring, v: int, a: int, b: int) -> list[int]:
    return pc.kempe_from(v, a, b)
