"""Pure-Python gain/split-information kernel.

Reference implementation used when the compiled extension is missing
(or disabled via APIDIALOG_PURE=1). Group accumulation order is pinned
— null group first, then codes ascending — so both backends produce
bit-identical floats.
"""

from __future__ import annotations

import math

import numpy as np


def column_stats(codes) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-column information gain, split information and group count.

    ``codes`` is an (n_rows, n_cols) integer matrix of encoded cell
    values; -1 marks a null cell and forms its own group. Rows are
    distinct APIs, so the pre-split entropy is log2(n).
    """
    codes = np.asarray(codes, dtype=np.int32)
    n, m = codes.shape
    gains = np.zeros(m, dtype=np.float64)
    splits = np.zeros(m, dtype=np.float64)
    ngroups = np.zeros(m, dtype=np.int64)
    if n == 0:
        return gains, splits, ngroups
    total_bits = math.log2(n)
    for j in range(m):
        counts = [0] * (n + 1)  # slot 0 holds the null group
        maxcode = -1
        for i in range(n):
            code = int(codes[i, j])
            if code < 0:
                counts[0] += 1
            else:
                counts[code + 1] += 1
                if code > maxcode:
                    maxcode = code
        expected = 0.0
        split = 0.0
        groups = 0
        for c in range(maxcode + 2):
            count = counts[c]
            if count > 0:
                groups += 1
                p = count / n
                expected += p * math.log2(count)
                split -= p * math.log2(p)
        gains[j] = total_bits - expected
        splits[j] = split
        ngroups[j] = groups
    return gains, splits, ngroups
