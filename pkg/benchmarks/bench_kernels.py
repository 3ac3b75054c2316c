"""Timing comparison of the two kernel backends on representative work.

Run with: python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, side-stepping the CYCLOSPEC_BACKEND
switch, so one process can time them against each other. The workloads
mirror what search and the report command actually do: full enumeration
of a mask space, refutation of a non-representable order, a large batch
membership check, and the sum-free maximum.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cyclospec.algebra import by_name, mandatory_mask
from cyclospec.kernels import numba_backend, numpy_backend


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    mand_27 = mandatory_mask(by_name("2_7"))
    mand_47 = mandatory_mask(by_name("4_7"))
    mand_77 = mandatory_mask(by_name("7_7"))
    rng = np.random.default_rng(20260819)
    batch = rng.integers(0, 1 << 20, size=200_000, dtype=np.int64)
    return [
        ("enumerate 2_7 masks, n=36", lambda b: b.all_valid_masks(36, mand_27)),
        ("enumerate 7_7 masks, n=28", lambda b: b.all_valid_masks(28, mand_77)),
        ("refute 4_7, n=37 (prime)", lambda b: b.exists_valid(37, mand_47)),
        ("check 200k masks, n=40", lambda b: b.check_masks(40, mand_77, batch)),
        ("max sum-free size, n=24", lambda b: b.max_sumfree_size(24)),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions; best is kept")
    args = parser.parse_args()

    # trigger numba compilation outside the timed region
    warm = mandatory_mask(by_name("7_7"))
    numba_backend.exists_valid(8, warm)
    numba_backend.check_masks(8, warm, np.array([5], dtype=np.int64))
    numba_backend.max_sumfree_size(8)

    print(f"{'workload':<28} {'numba':>10} {'numpy':>10} {'numpy/numba':>12}")
    for label, fn in workloads():
        t_nb = _time(lambda: fn(numba_backend), args.repeat)
        t_np = _time(lambda: fn(numpy_backend), args.repeat)
        print(f"{label:<28} {t_nb:>9.4f}s {t_np:>9.4f}s {t_np / t_nb:>11.1f}x")


if __name__ == "__main__":
    main()
