"""Batch reduction: independence filters, type-2 elimination, plans and their
execution, and the weak / butterfly batch pipelines."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .chain_index import ChainIndex
from .classify import EdgeType, OPS, row_from_type, type_from_row, _raise_status
from .graph_core import Graph, PartialColoring

# Types counted for the batch constants: T0, T1..T5 over ordered pairs, T6 over
# ordered 4-tuples; weak edges have FAN plus AB over ordered pairs.
N_BUTTERFLY_TYPES = 1 + 5 * 8 * 7 + 8 * 7 * 6 * 5
N_WEAK_TYPES = 1 + 8 * 7
FILTER_BUTTERFLY = 33
# one color pair: an accepted edge marks at most 16 vertices, each the far end
# of at most one chain starting near a single other candidate
FILTER_WEAK = 17
K_BUTTERFLY = FILTER_BUTTERFLY * N_BUTTERFLY_TYPES
K_WEAK = FILTER_WEAK * N_WEAK_TYPES


class ReductionError(RuntimeError):
    pass


class CoherenceViolation(ReductionError):
    pass


class FanFailure(ReductionError):
    pass


class UnsupportedType(ReductionError):
    pass


class WitnessNotFound(ReductionError):
    pass


@dataclass(frozen=True)
class ReductionPlan:
    """Chains to kempe (start, a, b) followed by atomic local steps."""
    edge: int
    type: EdgeType
    local_steps: tuple[tuple[str, int, int], ...]
    chains: tuple[tuple[int, int, int], ...]
    array: np.ndarray = field(repr=False, compare=False)


def _plan_from_array(et: EdgeType, arr: np.ndarray) -> ReductionPlan:
    chains = tuple((int(arr[2 + 3 * i]), int(arr[3 + 3 * i]), int(arr[4 + 3 * i]))
                   for i in range(int(arr[1])))
    steps = tuple((OPS[int(arr[9 + 3 * i])], int(arr[10 + 3 * i]), int(arr[11 + 3 * i]))
                  for i in range(int(arr[8])))
    return ReductionPlan(int(arr[0]), et, steps, chains, arr)


def _raise_exec(st: int, e: int) -> None:
    if st == K.E_COHERENCE:
        raise CoherenceViolation(f"plan for edge {e} recolors an edge of an earlier plan")
    if st == K.E_UNSUPPORTED:
        raise UnsupportedType(f"edge {e}: type 2 must be eliminated before planning")
    raise ReductionError(f"plan for edge {e} failed with kernel status {st}")


# ----------------------------------------------------------------------
# filters

def filter_4_independent(g: Graph, candidates) -> list[int]:
    """Greedy subset whose edges are pairwise at distance greater than 4."""
    cand = np.ascontiguousarray(candidates, dtype=np.int32)
    out = np.empty(cand.size, dtype=np.int32)
    k = g._core().filter_independent(cand, out, 4)
    return out[:k].tolist()


def ball_constant(radius: int = 4, maxdeg: int = 8) -> int:
    """Upper bound on the edges within distance `radius` of an edge, plus one."""
    verts = 2 * sum((maxdeg - 1) ** i for i in range(radius + 1))
    return verts * maxdeg // 2 + 1


def _filter_rows(core, rows: np.ndarray) -> np.ndarray:
    out = np.empty(rows.shape[0], dtype=np.int32)
    k = core.filter_chains(rows, out)
    return out[:k]


def filter_chain_independent(g: Graph, ci: ChainIndex,
                             typed: list[tuple[int, EdgeType]]) -> list[int]:
    """Greedy subset of same-type edges that are pairwise chain independent."""
    if not typed:
        return []
    if len({et.key for _, et in typed}) != 1:
        raise ValueError("all entries must share one type")
    rows = np.stack([row_from_type(et) for _, et in typed])
    for i, (e, _) in enumerate(typed):
        rows[i, 44] = e
    keep = _filter_rows(ci._core, rows)
    return [typed[i][0] for i in keep.tolist()]


# ----------------------------------------------------------------------
# type 2

def eliminate_type2(g: Graph, pc: PartialColoring, edges, a: int, b: int,
                    ci: ChainIndex | None = None) -> PartialColoring:
    """Turn type-2_ab edges into type-1_ab edges by swapping yz and xz.

    y is the endpoint where a and b are both free; z and c are searched for
    among the common neighbors.  Raises WitnessNotFound when an edge is not
    of type 2_ab.
    """
    edges = [int(e) for e in edges]
    if not edges:
        return pc
    if ci is not None and ci.version != pc.version:
        from .chain_index import StaleIndexError
        raise StaleIndexError("chain index does not match the current coloring")
    core = pc._core()
    core.index_reset(True)
    rows = np.zeros((len(edges), K.ROW), dtype=np.int32)
    rows[:, 5:11] = -1
    need = (1 << (a - 1)) | (1 << (b - 1))
    for i, e in enumerate(edges):
        if pc.color_of(e) is not None:
            raise WitnessNotFound(f"edge {e} is colored")
        u, v = g.endpoints(e)
        x, y = (u, v) if pc.free_mask(v) & need == need else (v, u)
        rows[i, [0, 1, 2, 5, 6, 44]] = (K.T2, a, b, x, y, e)
    _eliminate_rows(core, rows)
    pc.version += 1
    return pc


def _eliminate_rows(core, rows: np.ndarray) -> None:
    st, i = core.eliminate_type2(rows)
    if st != K.OK:
        raise WitnessNotFound(f"edge {int(rows[i, 44])}: no type-2 witness")


# ----------------------------------------------------------------------
# plans

def plan_reduction(g: Graph, pc: PartialColoring, ci: ChainIndex, et: EdgeType,
                   e: int) -> ReductionPlan:
    if et.tag == "T2":
        raise UnsupportedType("type 2 must be eliminated before planning")
    row = row_from_type(et)[None, :].copy()
    row[0, 44] = e
    arr = np.zeros((1, K.PLAN), dtype=np.int32)
    st, _ = ci._core.plans(row, arr)
    if st != K.OK:
        _raise_exec(st, e)
    return _plan_from_array(et, arr[0])


def execute_plans(g: Graph, pc: PartialColoring, plans: list[ReductionPlan],
                  debug: bool = True) -> PartialColoring:
    """Apply all plans; with debug, overlapping diffs raise CoherenceViolation."""
    if not plans:
        return pc
    arr = np.stack([p.array for p in plans]).astype(np.int32)
    core = pc._core()
    st, i = core.execute(arr, debug)
    pc.version += 1
    if st != K.OK:
        _raise_exec(st, plans[i].edge)
    return pc


# ----------------------------------------------------------------------
# batches

def type_keys(rows: np.ndarray) -> np.ndarray:
    """Integer key ordered by tag, then color tuple."""
    k = rows[:, 0].astype(np.int64)
    for j in range(1, 5):
        k = k * 9 + rows[:, j]
    return k


@dataclass
class BatchOutcome:
    colored: np.ndarray
    tag: str
    colors: tuple[int, ...]
    classified: int
    majority: int
    kept: int
    recolored: int
    eliminated: bool
    filter_in: int = 0
    filter_out: int = 0
    coherence_checked: bool = False


@dataclass
class PreparedBatch:
    """Selected rows and their plans, ready to execute on the same core."""
    rows: np.ndarray
    plans: np.ndarray
    tag: str
    colors: tuple[int, ...]
    classified: int
    majority: int
    eliminated: bool


def prepare_batch(core, edges: np.ndarray, weak: bool) -> PreparedBatch:
    """Classify, take the majority type, eliminate type 2, filter and plan.

    Type-2 elimination changes the coloring in place; nothing else does.
    """
    edges = np.ascontiguousarray(edges, dtype=np.int32)
    core.index_reset(True)
    rows = np.zeros((edges.size, K.ROW), dtype=np.int32)
    st, i = core.classify(edges, rows, weak)
    if st != K.OK:
        if st == K.E_FAN:
            raise FanFailure(f"edge {int(edges[i])}: maximal fan without a free color")
        _raise_status(st, int(edges[i]))
    keys = type_keys(rows)
    uniq, counts = np.unique(keys, return_counts=True)
    best = uniq[int(np.argmax(counts))]
    sel = np.ascontiguousarray(rows[keys == best])
    tag = K.TAG_NAMES[int(sel[0, 0])]
    ncol = {"T6": 4, "T0": 0, "FAN": 0}.get(tag, 2)
    colors = tuple(int(c) for c in sel[0, 1:1 + ncol])
    eliminated = False
    if tag == "T2":
        _eliminate_rows(core, sel)
        core.index_reset(True)
        eliminated = True
    if tag in ("T0", "FAN"):
        keep = sel
    else:
        keep = np.ascontiguousarray(sel[_filter_rows(core, sel)])
    plans = np.zeros((keep.shape[0], K.PLAN), dtype=np.int32)
    st, i = core.plans(keep, plans)
    if st != K.OK:
        _raise_exec(st, int(keep[i, 44]))
    return PreparedBatch(keep, plans, tag, colors, int(edges.size), int(sel.shape[0]), eliminated)


def run_batch(core, edges: np.ndarray, weak: bool, debug: bool = False) -> BatchOutcome:
    """One batch on a kernel core: classify, majority type, filter, execute."""
    pb = prepare_batch(core, edges, weak)
    st, i = core.execute(pb.plans, debug)
    if st != K.OK:
        _raise_exec(st, int(pb.plans[i, 0]))
    filtered = pb.tag not in ("T0", "FAN")
    return BatchOutcome(
        colored=pb.rows[:, 44].copy(), tag=pb.tag, colors=pb.colors, classified=pb.classified,
        majority=pb.majority, kept=int(pb.rows.shape[0]),
        recolored=int(core.recolored()), eliminated=pb.eliminated,
        filter_in=pb.majority if filtered else 0,
        filter_out=int(pb.rows.shape[0]) if filtered else 0,
        coherence_checked=debug)


def reduce_butterfly_batch(g: Graph, pc: PartialColoring, w,
                           debug: bool = True) -> tuple[PartialColoring, list[int]]:
    """Color a constant fraction of the uncolored butterfly-like edges w."""
    w = np.asarray(list(w) if not isinstance(w, np.ndarray) else w, dtype=np.int32)
    if w.size == 0:
        return pc, []
    out = run_batch(pc._core(), w, weak=False, debug=debug)
    pc.version += 1
    return pc, out.colored.tolist()


def reduce_weak_batch(g: Graph, pc: PartialColoring, w,
                      debug: bool = True) -> tuple[PartialColoring, list[int]]:
    """Color a constant fraction of the uncolored weak edges w."""
    w = np.asarray(list(w) if not isinstance(w, np.ndarray) else w, dtype=np.int32)
    if w.size == 0:
        return pc, []
    out = run_batch(pc._core(), w, weak=True, debug=debug)
    pc.version += 1
    return pc, out.colored.tolist()


def rounds_bound(size: int, k: int) -> int:
    """Rounds needed when each round keeps at least 1/k of what is left."""
    if size <= 1:
        return 1
    return math.ceil(math.log(size) / -math.log1p(-1.0 / k)) + 1
