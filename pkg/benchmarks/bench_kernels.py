#!/usr/bin/env python3
"""
Benchmark the sweep kernels: numba @njit vs the pure-numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--widths 16 20 24] [--repeat 3]

The first numba call per signature includes JIT compilation (or a cache
load); it is run once as warm-up and excluded from the timings. Results
are checked for equality before anything is timed.
"""
import argparse
import time

import numpy as np

from abrnum import _kernels
from abrnum.core import bases_array


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--widths", type=int, nargs="+", default=[16, 20, 22, 24])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _kernels.backends()
    if "numba" not in backends:
        print("numba not available; only the numpy path can run")

    print(f"dispatch backend: {_kernels.BACKEND}")
    print(f"{'kernel':<16}{'n':>4}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for n in args.widths:
        size = 1 << n
        b = bases_array(n)
        values = np.arange(size, dtype=np.int64)
        cases = {
            "decode_patterns": lambda k: k["decode_patterns"](0, size, n, b),
            "encode_values": lambda k: k["encode_values"](0, size, n),
            "popcount": lambda k: k["popcount"](values),
        }
        for name, call in cases.items():
            results = {bk: call(kern) for bk, kern in backends.items()}  # warm-up
            ref = results["numpy"]
            for bk, res in results.items():
                assert np.array_equal(res, ref), f"{name} n={n}: {bk} disagrees"
            t = {bk: best_of(lambda: call(kern), args.repeat) for bk, kern in backends.items()}
            t_np = t["numpy"] * 1e3
            if "numba" in t:
                t_nb = t["numba"] * 1e3
                print(f"{name:<16}{n:>4}{t_np:>12.1f}{t_nb:>12.1f}{t_np / t_nb:>9.1f}x")
            else:
                print(f"{name:<16}{n:>4}{t_np:>12.1f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
