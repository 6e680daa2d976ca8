"""Benchmark the inversion-set peel kernel: numba JIT against pure numpy.

The peel turns the target inversion set of an ideal into a reduced word by
repeated rank-one updates; it is the hot loop behind minimal elements and
edge typing.  This script times both backends on the same workload and
reports the speedup, e.g.

    python benchmarks/bench_kernels.py --type E6 --repeat 3

The same switch is available at runtime through ROOTPOSETS_PURE_NUMPY=1.
"""

from __future__ import annotations

import argparse
import time

from rootposets import _kernels
from rootposets.ideals import enumerate_upper_ideals, target_inversion_rows
from rootposets.rootsystem import root_system


def build_workload(type_name: str) -> list:
    rs = root_system(type_name)
    tables = _kernels.peel_tables(rs)
    rows = [target_inversion_rows(ideal) for ideal in enumerate_upper_ideals(rs)]
    return [(r, tables) for r in rows]


def time_backend(fn, workload, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for rows, (gvecs, uvecs, simples) in workload:
            fn(rows, gvecs, uvecs, simples)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--type", default="E6", help="root system (default E6)")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    workload = build_workload(args.type)
    print(f"{args.type}: peeling {len(workload)} ideals, best of {args.repeat}")

    t_numpy = time_backend(_kernels.peel_numpy, workload, args.repeat)
    print(f"  pure numpy : {t_numpy:8.3f} s")

    if _kernels.HAS_NUMBA:
        rows0, (gvecs, uvecs, simples) = workload[0]
        _kernels.peel_numba(rows0, gvecs, uvecs, simples)  # warm the JIT
        t_numba = time_backend(_kernels.peel_numba, workload, args.repeat)
        print(f"  numba      : {t_numba:8.3f} s   ({t_numpy / t_numba:.1f}x)")
    else:
        print("  numba      : not installed")


if __name__ == "__main__":
    main()
