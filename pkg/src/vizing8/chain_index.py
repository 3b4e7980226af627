"""Chain index: per vertex and color pair, the cycle flag and endpoints of the
(a,b)-chain through that vertex.

Records live in a dense ``n x 28`` table of chain ids plus one record per
chain.  ``build`` fills every entry with one walk per chain; ``lazy`` fills
entries on first query, which the batch reducer uses because it only looks at
chains near the edges being colored.
"""
from __future__ import annotations

from .graph_core import Graph, PartialColoring
from ._kernels import core as _k


class StaleIndexError(RuntimeError):
    """The coloring changed after the index was built."""


class IsCycle(ValueError):
    pass


def _check_pair(a: int, b: int) -> None:
    if a == b or not (1 <= a <= 8 and 1 <= b <= 8):
        raise ValueError(f"invalid color pair ({a}, {b})")


class ChainIndex:
    def __init__(self, g: Graph, pc: PartialColoring, full: bool):
        self.g = g
        self.pc = pc
        self.version = pc.version
        self._core = _k.Core(g.eu, g.ev, g.deg, g.nbr, g.inc, pc.color, pc.mask, pc.at)
        self._core.index_reset(lazy=not full)
        if full:
            self._core.index_build_all()

    @property
    def visits(self) -> int:
        """Vertices visited by chain walks so far."""
        return int(self._core.chain_visits())

    def _record(self, v: int, a: int, b: int) -> tuple[int, int, int, bool]:
        if self.pc.version != self.version:
            raise StaleIndexError(
                f"index built at version {self.version}, coloring is at {self.pc.version}")
        _check_pair(a, b)
        return self._core.chain_query(v, a, b)

    def chain_id(self, v: int, a: int, b: int) -> int:
        return int(self._record(v, a, b)[0])

    def is_cycle(self, v: int, a: int, b: int) -> bool:
        return bool(self._record(v, a, b)[3])

    def endpoints(self, v: int, a: int, b: int) -> tuple[int, int]:
        _, e0, e1, cyc = self._record(v, a, b)
        if cyc:
            raise IsCycle(f"the ({a},{b})-chain through {v} is a cycle")
        return int(e0), int(e1)

    def same_chain(self, u: int, v: int, a: int, b: int) -> bool:
        return self.chain_id(u, a, b) == self.chain_id(v, a, b)

    def has_endpoints(self, v: int, a: int, b: int, p: int, q: int) -> bool:
        """True iff the (a,b)-chain through v is a path with endpoints {p, q}."""
        _, e0, e1, cyc = self._record(v, a, b)
        return not cyc and {int(e0), int(e1)} == {p, q}


def build(g: Graph, pc: PartialColoring) -> ChainIndex:
    """Index with every (vertex, pair) record computed up front."""
    return ChainIndex(g, pc, full=True)


def lazy(g: Graph, pc: PartialColoring) -> ChainIndex:
    """Index whose records are computed on first query."""
    return ChainIndex(g, pc, full=False)


def chain_is_cycle(ci: ChainIndex, v: int, a: int, b: int) -> bool:
    return ci.is_cycle(v, a, b)


def chain_endpoints(ci: ChainIndex, v: int, a: int, b: int) -> tuple[int, int]:
    return ci.endpoints(v, a, b)


def same_chain(ci: ChainIndex, u: int, v: int, a: int, b: int) -> bool:
    return ci.same_chain(u, v, a, b)
