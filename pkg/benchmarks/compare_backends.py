"""Time the compiled kernels against the pure-Python twin on the same graphs.

    python benchmarks/compare_backends.py --sizes 1000,2000,4000 --seeds 3
"""
from __future__ import annotations

import argparse
import sys

from vizing8 import _kernels
from vizing8.bench import run_bench, write_csv


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="1000,2000,4000")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--style", default="triangulation")
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    args = p.parse_args(argv)
    if _kernels.load_compiled() is None:
        print("compiled extension not built; run `python setup.py build_ext --inplace`",
              file=sys.stderr)
        return 1
    sizes = [int(float(s)) for s in args.sizes.split(",")]
    fast = run_bench(sizes, args.seeds, args.style, "cython")
    slow = run_bench(sizes, args.seeds, args.style, "python")
    out = open(args.output, "w") if args.output else sys.stdout
    write_csv(fast + slow, out)
    for a, b in zip(fast, slow):
        print(f"n={a.n}: cython {a.mean_time:.3f}s  python {b.mean_time:.3f}s  "
              f"speedup {b.mean_time / a.mean_time:.1f}x", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
