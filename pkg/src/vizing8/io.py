"""Edge-list and coloring file formats.

An edge list is DIMACS-flavored::

    c optional comments
    p edge <n> <m>
    e <u> <v>          (m lines, 0-based vertices)

A coloring file has one ``<u> <v> <color>`` line per edge in edge-list order.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .graph_core import Graph, GraphError, from_arrays


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def _lines(src: str | IO[str]) -> Iterable[tuple[int, list[str]]]:
    text = src if isinstance(src, str) else src.read()
    for no, raw in enumerate(io.StringIO(text), 1):
        tok = raw.split()
        if tok and tok[0] != "c":
            yield no, tok


def _ints(tok: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tok]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tok)!r}", no) from None


@dataclass
class EdgeListFile:
    n: int
    edges: np.ndarray

    @classmethod
    def parse(cls, src: str | IO[str]) -> "EdgeListFile":
        n = m = None
        edges: list[list[int]] = []
        for no, tok in _lines(src):
            if tok[0] == "p":
                if n is not None:
                    raise ParseError("second problem line", no)
                if len(tok) != 4 or tok[1] != "edge":
                    raise ParseError("problem line must be 'p edge <n> <m>'", no)
                n, m = _ints(tok[2:], no)
                if n < 0 or m < 0:
                    raise ParseError("negative size in problem line", no)
            elif tok[0] == "e":
                if n is None:
                    raise ParseError("edge line before the problem line", no)
                if len(tok) != 3:
                    raise ParseError("edge line must be 'e <u> <v>'", no)
                u, v = _ints(tok[1:], no)
                if not (0 <= u < n and 0 <= v < n):
                    raise ParseError(f"endpoint outside [0, {n})", no)
                edges.append([u, v])
            else:
                raise ParseError(f"unknown line type {tok[0]!r}", no)
        if n is None:
            raise ParseError("missing 'p edge <n> <m>' line")
        if len(edges) != m:
            raise ParseError(f"declared {m} edges, found {len(edges)}")
        return cls(n, np.asarray(edges, dtype=np.int64).reshape(-1, 2))

    @classmethod
    def from_graph(cls, g: Graph) -> "EdgeListFile":
        return cls(g.n, np.stack([g.eu, g.ev], axis=1).astype(np.int64))

    def graph(self) -> Graph:
        """The validated graph; GraphError subclasses signal bad input."""
        return from_arrays(self.n, self.edges)

    def format(self) -> str:
        out = [f"p edge {self.n} {self.edges.shape[0]}"]
        out += [f"e {u} {v}" for u, v in self.edges.tolist()]
        return "\n".join(out) + "\n"


@dataclass
class ColoringFile:
    edges: np.ndarray
    colors: np.ndarray

    @classmethod
    def parse(cls, src: str | IO[str]) -> "ColoringFile":
        rows = []
        for no, tok in _lines(src):
            if len(tok) != 3:
                raise ParseError("coloring line must be '<u> <v> <color>'", no)
            rows.append(_ints(tok, no))
        arr = np.asarray(rows, dtype=np.int64).reshape(-1, 3)
        return cls(arr[:, :2].copy(), arr[:, 2].copy())

    @classmethod
    def from_coloring(cls, g: Graph, colors: np.ndarray) -> "ColoringFile":
        return cls(np.stack([g.eu, g.ev], axis=1).astype(np.int64),
                   np.asarray(colors, dtype=np.int64))

    def colors_for(self, g: Graph) -> np.ndarray:
        """Colors per edge id of g; the edge lines must follow g's edge order."""
        if self.edges.shape[0] != g.m:
            raise ParseError(f"coloring has {self.edges.shape[0]} lines, graph has {g.m} edges")
        same = (self.edges[:, 0] == g.eu) & (self.edges[:, 1] == g.ev)
        flip = (self.edges[:, 0] == g.ev) & (self.edges[:, 1] == g.eu)
        bad = np.flatnonzero(~(same | flip))
        if bad.size:
            raise ParseError(f"coloring line for edge {int(bad[0])} names a different edge")
        return self.colors.copy()

    def graph(self) -> Graph:
        """Graph spanned by the listed edges (vertices 0..max endpoint)."""
        n = int(self.edges.max()) + 1 if self.edges.size else 0
        return from_arrays(n, self.edges)

    def format(self) -> str:
        return "".join(f"{u} {v} {c}\n" for (u, v), c in zip(self.edges.tolist(), self.colors.tolist()))


def read_graph(src: str | IO[str]) -> Graph:
    return EdgeListFile.parse(src).graph()


def write_graph(g: Graph, dst: IO[str]) -> None:
    dst.write(EdgeListFile.from_graph(g).format())


def read_coloring(src: str | IO[str], g: Graph) -> np.ndarray:
    return ColoringFile.parse(src).colors_for(g)


def write_coloring(g: Graph, colors: np.ndarray, dst: IO[str]) -> None:
    dst.write(ColoringFile.from_coloring(g, colors).format())


__all__ = ["ParseError", "EdgeListFile", "ColoringFile", "read_graph", "write_graph",
           "read_coloring", "write_coloring", "GraphError"]
