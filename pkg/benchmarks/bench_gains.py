"""Benchmark the gain kernel: compiled extension vs pure Python.

Usage: python benchmarks/bench_gains.py [rows] [cols] [repeats]
"""

from __future__ import annotations

import sys
import time

import numpy as np

from apidialog.treecore import backend, pure

try:
    from apidialog.treecore import _gainkernel
except ImportError:
    _gainkernel = None


def make_matrix(rows: int, cols: int, symbols: int, seed: int = 7) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(-1, symbols, size=(rows, cols), dtype=np.int32)


def bench(fn, matrix: np.ndarray, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(matrix)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    rows = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    cols = int(sys.argv[2]) if len(sys.argv) > 2 else 64
    repeats = int(sys.argv[3]) if len(sys.argv) > 3 else 5
    matrix = make_matrix(rows, cols, symbols=12)
    print(f"matrix {rows}x{cols}, active backend: {backend()}")

    t_pure = bench(pure.column_stats, matrix, repeats)
    print(f"pure:     {t_pure * 1e3:8.2f} ms")
    if _gainkernel is None:
        print("compiled: not built (pip install -e . builds it)")
        return
    t_ext = bench(_gainkernel.column_stats, matrix, repeats)
    print(f"compiled: {t_ext * 1e3:8.2f} ms  ({t_pure / t_ext:.1f}x faster)")

    for a, b in zip(pure.column_stats(matrix), _gainkernel.column_stats(matrix)):
        if not np.array_equal(a, b):
            raise SystemExit("backends disagree!")
    print("backends agree bit-for-bit")


if __name__ == "__main__":
    main()
