"""Benchmark harness: wall time of color_graph over sizes and seeds.

Graph generation is not timed.  Each CSV row is one (backend, n) cell with
the mean over seeds and the mean divided by n log2 n.
"""
from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import IO, Sequence

from .driver import color_graph
from .generators import generate_planar

CSV_FIELDS = ("n", "mean_time", "time_per_nlogn", "backend", "seeds", "style")


@dataclass
class BenchRow:
    n: int
    mean_time: float
    time_per_nlogn: float
    backend: str
    seeds: int
    style: str

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in CSV_FIELDS}


def time_one(n: int, seed: int, style: str, backend: str | None = None) -> tuple[int, float]:
    """(actual n, seconds) for one coloring run."""
    g = generate_planar(n, seed, style)
    t0 = time.perf_counter()
    pc, _ = color_graph(g, backend=backend)
    dt = time.perf_counter() - t0
    if not pc.is_total():
        raise RuntimeError(f"incomplete coloring for n={n} seed={seed}")
    return g.n, dt


def run_bench(sizes: Sequence[int], seeds: int = 5, style: str = "triangulation",
              backend: str | None = None) -> list[BenchRow]:
    rows = []
    for n in sizes:
        times = []
        real = n
        for s in range(seeds):
            real, dt = time_one(n, s, style, backend)
            times.append(dt)
        mean = sum(times) / len(times)
        rows.append(BenchRow(real, mean, mean / (real * math.log2(max(real, 2))),
                             _name(backend), seeds, style))
    return rows


def _name(backend: str | None) -> str:
    from . import _kernels

    return backend or _kernels.BACKEND


def doubling_ratios(rows: Sequence[BenchRow]) -> list[tuple[int, float]]:
    """time(2n)/time(n) for consecutive rows whose sizes double."""
    out = []
    for a, b in zip(rows, rows[1:]):
        if b.backend == a.backend and abs(b.n - 2 * a.n) <= 0.01 * b.n:
            out.append((a.n, b.mean_time / a.mean_time))
    return out


def write_csv(rows: Sequence[BenchRow], dst: IO[str]) -> None:
    w = csv.DictWriter(dst, fieldnames=CSV_FIELDS)
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
