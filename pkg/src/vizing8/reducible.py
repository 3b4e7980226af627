"""Weak edges, butterflies and reducible-edge statistics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph_core import Graph

THEOREM_RATIO = 1460


class HasIsolatedVertex(ValueError):
    pass


@dataclass(frozen=True)
class ButterflyWitness:
    """B1 (three v vertices) or B2 (four) around the butterfly-like edge xy."""
    kind: str
    x: int
    y: int
    z: int
    v: tuple[int, ...]
    edge: int


def is_weak(g: Graph, e: int) -> int | None:
    """Endpoint x such that e is x-weak, or None.

    x has at most 8 - d(y) + [d(y) = 8] neighbors of degree 8.
    """
    x = int(g._core().weak_end(e))
    return None if x < 0 else x


def find_butterfly(g: Graph, e: int) -> ButterflyWitness | None:
    w = g._core().butterfly(e)
    if w is None:
        return None
    kind, x, y, z, v1, v2, v3, v4 = w
    if kind == 1:
        return ButterflyWitness("B1", x, y, z, (v1, v2, v3), e)
    return ButterflyWitness("B2", x, y, z, (v1, v2, v3, v4), e)


def scan_arrays(g: Graph, edges: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    if edges is None:
        edges = np.arange(g.m, dtype=np.int32)
    edges = np.ascontiguousarray(edges, dtype=np.int32)
    ow = np.empty(edges.size, dtype=np.int32)
    ob = np.empty(edges.size, dtype=np.int32)
    nw, nb = g._core().scan(edges, ow, ob)
    return ow[:nw], ob[:nb]


def scan_reducible(g: Graph) -> tuple[list[int], list[int]]:
    """All weak edges and all butterfly-like edges."""
    w, b = scan_arrays(g)
    return w.tolist(), b.tolist()


@dataclass(frozen=True)
class ReducibleStats:
    n: int
    m: int
    weak: int
    butterfly: int
    reducible: int

    @property
    def ratio(self) -> Fraction:
        """reducible * 1460 / n; at least 1 for planar graphs."""
        return Fraction(self.reducible * THEOREM_RATIO, self.n) if self.n else Fraction(0)


def reducible_stats(g: Graph) -> ReducibleStats:
    if g.n and np.any(g.deg == 0):
        raise HasIsolatedVertex(f"vertex {int(np.argmax(g.deg == 0))} is isolated")
    w, b = scan_arrays(g)
    red = np.union1d(w, b).size
    return ReducibleStats(g.n, g.m, int(w.size), int(b.size), int(red))
