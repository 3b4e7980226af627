"""Types of uncolored butterfly-like edges.

Classification runs in the kernel and follows the case analysis for B1 (always
type 0) and the decision tree for B2.  ``verify_type`` is an independent,
deliberately plain re-check of the type definitions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .chain_index import ChainIndex, StaleIndexError
from .graph_core import Graph, PartialColoring
from .reducible import ButterflyWitness

OPS = {K.ASSIGN: "assign", K.SWAP: "swap", K.RECOLOR: "recolor"}
OPCODES = {v: k for k, v in OPS.items()}

Step = tuple[str, int, int]


class PreconditionViolated(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


_NCOLORS = {"T0": 0, "T1": 2, "T2": 2, "T3": 2, "T4": 2, "T5": 2, "T6": 4, "FAN": 0, "AB": 2}
_WITNESS = {
    "T0": ("x", "y"), "T1": ("x", "y"), "T2": ("x", "y", "z"), "T3": ("x", "y", "z"),
    "T4": ("x", "y", "z", "v"), "T5": ("x", "y", "z", "v"), "T6": ("x", "y", "z", "v1", "v2"),
    "FAN": ("x", "y", "t"), "AB": ("x", "y", "t"),
}
_SLOT = {"x": 5, "y": 6, "z": 7, "t": 7, "v": 8, "v1": 9, "v2": 10}


@dataclass(frozen=True)
class EdgeType:
    """A type tag with its colors, witness vertices and (for T0) the script.

    ``c`` is the auxiliary color of the T2-T5 definitions.  FAN and AB are the
    weak-edge types: a fan rotation alone, or one (a,b)-chain flip at ``t``
    followed by a rotation.
    """
    tag: str
    colors: tuple[int, ...]
    witness: dict = field(compare=False)
    script: tuple[Step, ...] = ()
    c: int | None = None
    edge: int = -1
    row: np.ndarray | None = field(default=None, compare=False, repr=False)

    @property
    def key(self) -> tuple:
        return (self.tag, self.colors)


def type_from_row(row: np.ndarray) -> EdgeType:
    tag = K.TAG_NAMES[int(row[0])]
    colors = tuple(int(c) for c in row[1:1 + _NCOLORS[tag]])
    witness = {name: int(row[_SLOT[name]]) for name in _WITNESS[tag]}
    script = tuple((OPS[int(row[12 + 3 * i])], int(row[13 + 3 * i]), int(row[14 + 3 * i]))
                   for i in range(int(row[11])))
    c = int(row[43]) if tag in ("T2", "T3", "T4", "T5") else None
    return EdgeType(tag, colors, witness, script, c, int(row[44]), row.copy())


def row_from_type(et: EdgeType) -> np.ndarray:
    if et.row is not None:
        return et.row.copy()
    row = np.zeros(K.ROW, dtype=np.int32)
    row[5:11] = -1
    row[0] = K.TAG_NAMES.index(et.tag)
    row[1:1 + len(et.colors)] = et.colors
    for name, v in et.witness.items():
        row[_SLOT[name]] = v
    row[11] = len(et.script)
    for i, (op, p, q) in enumerate(et.script):
        row[12 + 3 * i: 15 + 3 * i] = (OPCODES[op], p, q)
    row[43] = et.c or 0
    row[44] = et.edge
    return row


def _fresh(pc: PartialColoring, ci: ChainIndex) -> None:
    if ci.pc is not pc or ci.version != pc.version:
        raise StaleIndexError("chain index does not match the current coloring")


def _raise_status(status: int, e: int) -> None:
    if status == K.E_PRECOND:
        raise PreconditionViolated(f"edge {e}: an edge within distance 1 is uncolored, or e is colored")
    if status == K.E_NOTBFLY:
        raise ClassificationError(f"edge {e} is not butterfly-like")
    if status == K.E_NOTWEAK:
        raise ClassificationError(f"edge {e} is not weak")
    if status == K.E_FAN:
        from .reduce import FanFailure
        raise FanFailure(f"edge {e}: maximal fan without a free color")
    raise ClassificationError(f"edge {e}: kernel status {status}")


def classify_rows(ci: ChainIndex, edges: np.ndarray, weak: bool) -> np.ndarray:
    edges = np.ascontiguousarray(edges, dtype=np.int32)
    rows = np.zeros((edges.size, K.ROW), dtype=np.int32)
    st, i = ci._core.classify(edges, rows, weak)
    if st != K.OK:
        _raise_status(st, int(edges[i]))
    return rows


def classify_edge(g: Graph, pc: PartialColoring, ci: ChainIndex,
                  w: ButterflyWitness) -> EdgeType:
    """Type of the uncolored butterfly-like edge w.edge."""
    _fresh(pc, ci)
    return type_from_row(classify_rows(ci, np.array([w.edge]), weak=False)[0])


def classify_weak_edge(g: Graph, pc: PartialColoring, ci: ChainIndex, e: int) -> EdgeType:
    """FAN or AB type of an uncolored weak edge."""
    _fresh(pc, ci)
    return type_from_row(classify_rows(ci, np.array([e]), weak=True)[0])


# ----------------------------------------------------------------------
# independent checker

def _col(g: Graph, pc: PartialColoring, u: int, v: int) -> int | None:
    e = g.edge_id(u, v)
    if e is None:
        return None
    return pc.color_of(e)


def _chain_xy(ci: ChainIndex, x: int, y: int, a: int, b: int) -> bool:
    """There is an (a,b)-chain with endpoints x and y."""
    return ci.has_endpoints(y, a, b, x, y)


def near_edges(g: Graph, e: int) -> set[int]:
    """Edges at distance at most 1 from e (incident to N[x] or N[y])."""
    x, y = g.endpoints(e)
    out: set[int] = set()
    for u in {x, y, *g.neighbors(x), *g.neighbors(y)}:
        out.update(eid for _, eid in g.incident(u))
    return out


def apply_script(pc: PartialColoring, script: tuple[Step, ...]) -> set[int]:
    """Apply steps atomically to pc (validated); returns the touched edges."""
    new: dict[int, int] = {}
    for op, p, q in script:
        if op == "swap":
            cp = new.get(p, pc.color_of(p) or 0)
            cq = new.get(q, pc.color_of(q) or 0)
            new[p], new[q] = cq, cp
        else:
            new[p] = q
    for e in new:
        pc.uncolor(e)
    for e, c in new.items():
        if c:
            pc.assign(e, c)
    return set(new)


def _script_ok(g: Graph, pc: PartialColoring, e: int, script: tuple[Step, ...]) -> bool:
    if not script:
        return False
    trial = pc.copy()
    before = set(np.flatnonzero(pc.color).tolist())
    try:
        touched = apply_script(trial, script)
    except ValueError:
        return False
    after = set(np.flatnonzero(trial.color).tolist())
    return after == before | {e} and touched <= near_edges(g, e) and trial.is_proper()


def verify_type(g: Graph, pc: PartialColoring, ci: ChainIndex, et: EdgeType, e: int) -> bool:
    """True iff e satisfies every defining condition of et under pc."""
    _fresh(pc, ci)
    if pc.color_of(e) is not None:
        return False
    w = et.witness
    x, y = w.get("x"), w.get("y")
    if {x, y} != set(g.endpoints(e)):
        return False
    cols = et.colors
    if len(set(cols)) != len(cols) or any(not 1 <= c <= 8 for c in cols):
        return False
    fx, fy = pc.free_colors(x), pc.free_colors(y)
    tag = et.tag
    if tag in ("T0", "FAN"):
        return _script_ok(g, pc, e, et.script)
    if tag == "AB":
        a, b = cols
        trial = pc.copy()
        trial.kempe_from(w["t"], a, b)
        return _script_ok(g, trial, e, et.script)
    if tag == "T1":
        a, b = cols
        return a in fx and b in fy and not _chain_xy(ci, x, y, a, b)
    c = et.c
    if tag == "T2":
        a, b = cols
        z = w["z"]
        return (a in fy and b in fy and c in fx and c not in (a, b)
                and z in g.neighbors(x) and z in g.neighbors(y)
                and _col(g, pc, y, z) == c and _col(g, pc, x, z) == a
                and not ci.is_cycle(x, a, b))
    if tag == "T3":
        a, b = cols
        z = w["z"]
        return (a in fx and b in fy and _chain_xy(ci, x, y, a, b)
                and c in fy and c not in (a, b) and z in g.neighbors(x)
                and b in pc.free_colors(z) and _col(g, pc, x, z) == c)
    if tag == "T4":
        a, b = cols
        z, v = w["z"], w["v"]
        return (a in fy and b in fy and ci.is_cycle(x, a, b) and c in fx and c not in (a, b)
                and len({x, y, z, v}) == 4 and _col(g, pc, x, v) == a
                and _col(g, pc, z, v) == c and b in pc.free_colors(z))
    if tag == "T5":
        a, b = cols
        z, v = w["z"], w["v"]
        fz = pc.free_colors(z)
        return (a in fy and b in fx and _chain_xy(ci, x, y, a, b)
                and c in fy and c not in (a, b) and len({x, y, z, v}) == 4
                and _col(g, pc, x, v) == c and _col(g, pc, z, v) == a
                and b in fz and c in fz)
    if tag == "T6":
        a, b, c6, d = cols
        z, v1, v2 = w["z"], w["v1"], w["v2"]
        fz = pc.free_colors(z)
        return (a in fy and c6 in fy and d in fy and b in fx
                and _chain_xy(ci, x, y, a, b) and ci.is_cycle(x, c6, d)
                and len({x, y, z, v1, v2}) == 5
                and _col(g, pc, x, v1) == c6 and _col(g, pc, x, v2) == a
                and _col(g, pc, z, v1) == a and _col(g, pc, z, v2) == c6
                and b in fz and d in fz)
    return False
