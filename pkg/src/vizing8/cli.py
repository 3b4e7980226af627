"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 guarantee
violation in strict mode.  A missing or "-" input reads stdin and a missing
or "-" output writes stdout, so ``gen | color | verify`` works.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from typing import IO, Iterator, Sequence

import numpy as np

from .graph_core import GraphError, PartialColoring
from .io import ColoringFile, EdgeListFile, ParseError

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_GUARANTEE = 0, 1, 2, 3


class InputError(Exception):
    pass


@contextlib.contextmanager
def _open_in(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdin
        return
    try:
        f = open(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    with f:
        yield f


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdout
        return
    with open(path, "w") as f:
        yield f


def _read_graph(path: str | None):
    with _open_in(path) as f:
        return EdgeListFile.parse(f).graph()


def _err(msg: str) -> None:
    print(f"vizing8: {msg}", file=sys.stderr)


# ----------------------------------------------------------------------
# commands

def cmd_color(args: argparse.Namespace) -> int:
    from .driver import (GuaranteeViolation, NoReducibleEdges, color_graph,
                         color_graph_with_fallback)

    g = _read_graph(args.input)
    if args.strict_planar:
        try:
            pc, trace = color_graph(g, strict_planar=True, backend=args.backend)
        except (GuaranteeViolation, NoReducibleEdges) as exc:
            _err(str(exc))
            return EXIT_GUARANTEE
        colors, flagged = pc.color, None
    else:
        res = color_graph_with_fallback(g, backend=args.backend)
        colors, trace, flagged = res.colors, res.trace, res.flagged
    with _open_out(args.output) as out:
        out.write(ColoringFile.from_coloring(g, colors).format())
    if args.trace:
        with open(args.trace, "w") as f:
            f.write(trace.to_json(indent=1))
    if flagged:
        _err(flagged)
        if colors.size and int(np.max(colors)) > 8:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .oracle import verify_coloring

    if args.coloring is None:
        # only a coloring (usually on stdin): its lines name the edges
        with _open_in(args.graph) as f:
            cf = ColoringFile.parse(f)
        g = cf.graph()
    else:
        g = _read_graph(args.graph)
        with _open_in(args.coloring) as f:
            cf = ColoringFile.parse(f)
    colors = cf.colors_for(g)
    if colors.size and (colors.min() < 1 or colors.max() > 8):
        bad = int(np.flatnonzero((colors < 1) | (colors > 8))[0])
        print(f"invalid: edge {bad} has color {int(colors[bad])}, not in 1..8")
        return EXIT_VERIFY
    try:
        pc = PartialColoring.from_colors(g, colors)
    except ValueError as exc:
        print(f"invalid: {exc}")
        return EXIT_VERIFY
    if not (verify_coloring(g, pc) and pc.is_total()):
        print("invalid")
        return EXIT_VERIFY
    print(f"ok: {g.m} edges, {pc.colors_used()} colors")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    from .reducible import HasIsolatedVertex, reducible_stats

    g = _read_graph(args.input)
    try:
        st = reducible_stats(g)
    except HasIsolatedVertex as exc:
        raise InputError(str(exc)) from None
    print(f"n {st.n}")
    print(f"m {st.m}")
    print(f"weak {st.weak}")
    print(f"butterfly {st.butterfly}")
    print(f"reducible {st.reducible}")
    print(f"ratio {float(st.ratio):.3f}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    from .generators import generate_planar

    g = generate_planar(args.n, args.seed, args.style)
    with _open_out(args.output) as out:
        out.write(EdgeListFile.from_graph(g).format())
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        return [int(float(t)) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def cmd_bench(args: argparse.Namespace) -> int:
    from .bench import doubling_ratios, run_bench, write_csv

    backends = ["cython", "python"] if args.backend == "both" else [args.backend]
    rows = []
    for b in backends:
        rows += run_bench(args.sizes, args.seeds, args.style, b)
    with _open_out(args.output) as out:
        write_csv(rows, out)
    for n, r in doubling_ratios(rows):
        print(f"time({2 * n})/time({n}) = {r:.2f}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    from .oracle import TooLarge, brute_chromatic_index

    g = _read_graph(args.input)
    try:
        res = brute_chromatic_index(g, args.max_colors)
    except TooLarge as exc:
        raise InputError(str(exc)) from None
    if res is None:
        print(f"no proper edge coloring with {args.max_colors} colors")
        return EXIT_VERIFY
    sys.stdout.write(ColoringFile.from_coloring(g, res).format())
    return EXIT_OK


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .generators import STYLES

    p = argparse.ArgumentParser(prog="vizing8", description="8-edge-coloring of planar graphs")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("color", help="color an edge list")
    c.add_argument("input", nargs="?")
    c.add_argument("-o", "--output")
    c.add_argument("--strict-planar", action="store_true")
    c.add_argument("--trace")
    c.add_argument("--backend", choices=("cython", "python"))
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("graph", nargs="?", help="edge list (or the coloring, if alone)")
    v.add_argument("coloring", nargs="?")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="count reducible edges")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_stats)

    gn = sub.add_parser("gen", help="generate a planar graph")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--style", choices=STYLES, default="triangulation")
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time the driver")
    b.add_argument("--sizes", type=_sizes, default=_sizes("1e3,1e4,1e5"))
    b.add_argument("--seeds", type=int, default=5)
    b.add_argument("--style", choices=STYLES, default="triangulation")
    b.add_argument("--backend", choices=("cython", "python", "both"))
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="exact chromatic-index search (at most 40 edges)")
    o.add_argument("input", nargs="?")
    o.add_argument("--max-colors", type=int, default=8)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, GraphError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
