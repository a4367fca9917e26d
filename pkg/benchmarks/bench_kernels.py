"""Compiled vs pure-Python exact inertia kernel.

    python3 benchmarks/bench_kernels.py [--sizes 10,25,50,100,200] [--repeat 5]

Inputs are adjacency matrices of random gain graphs with gains in {1, i, -1, -i},
the matrices the exact rank path actually sees: a sparse series (average
degree 3, the shape of cycle-plus-forest graphs) and a dense one (edge
probability 0.3). Dense elimination outgrows int64 between n = 25 and 50; the
compiled kernel then raises OverflowError and the Python kernel takes over.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from gainrank.harness import random_gains
from gainrank.graph import UndirectedGraph
from gainrank.kernels import py_gaussian_inertia
from gainrank.spectral import adjacency_matrix

try:
    from gainrank import _ckernels
except ImportError:
    _ckernels = None


def matrix(n: int, seed: int, p: float = 0.3):
    rng = random.Random(seed)
    g = UndirectedGraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
    return adjacency_matrix(random_gains(rng, g, 4)).gaussian


def timed(fn, args, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10,25,50,100,200")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernel not built; run `python3 setup.py build_ext --inplace`", file=sys.stderr)
        return 1
    for label, density in (("sparse (avg degree 3)", None), ("dense (p = 0.3)", 0.3)):
        print(f"\n{label}")
        print(f"{'n':>5} {'python ms':>11} {'cython ms':>11} {'speedup':>8}  inertia")
        for n in (int(s) for s in args.sizes.split(",")):
            m = matrix(n, n, density if density is not None else min(1.0, 3 / max(1, n - 1)))
            want = py_gaussian_inertia(*m)
            tp = timed(py_gaussian_inertia, m, args.repeat)
            try:
                got = _ckernels.gaussian_inertia(*m)
            except OverflowError:
                print(f"{n:>5} {tp * 1e3:11.3f} {'overflow':>11} {'-':>8}  {want}")
                continue
            assert got == want, (got, want)
            tc = timed(_ckernels.gaussian_inertia, m, args.repeat)
            print(f"{n:>5} {tp * 1e3:11.3f} {tc * 1e3:11.3f} {tp / tc:8.1f}x  {want}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
