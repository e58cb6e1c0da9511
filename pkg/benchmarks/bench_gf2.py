"""Benchmark the GF(2) RREF kernels: compiled vs pure Python.

Usage: python benchmarks/bench_gf2.py [--sizes 128,256,512] [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from lscat import _gf2py, gf2


def random_rows(n: int, ncols: int, rng: random.Random) -> list[int]:
    return [rng.getrandbits(ncols) for _ in range(n)]


def bench(fn, rows, repeat):
    times = []
    for _ in range(repeat):
        work = list(rows)
        t0 = time.perf_counter()
        fn(work)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="128,256,512,1024")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    have_c = gf2._gf2c is not None
    print(f"compiled kernel available: {have_c}")
    print(f"{'n x n':>10} {'py best':>10} {'c best':>10} {'speedup':>8}")
    for n in sizes:
        rows = random_rows(n, n, rng)
        py_best, _ = bench(
            lambda w: _gf2py.rref_ints(w, n), rows, args.repeat
        )
        if have_c:
            c_best, _ = bench(
                lambda w: gf2._rref_c(w, n, n), rows, args.repeat
            )
            # sanity: identical pivots
            a, b = list(rows), list(rows)
            assert _gf2py.rref_ints(a, n) == gf2._rref_c(b, n, n)
            assert a == b
            print(
                f"{n:>6}x{n:<3} {py_best * 1e3:>9.2f}ms {c_best * 1e3:>9.2f}ms"
                f" {py_best / c_best:>7.1f}x"
            )
        else:
            print(f"{n:>6}x{n:<3} {py_best * 1e3:>9.2f}ms {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
