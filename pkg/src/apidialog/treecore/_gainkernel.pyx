# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled gain/split-information kernel; mirrors pure.py exactly."""

import numpy as np

cimport numpy as cnp
from libc.math cimport log2

cnp.import_array()


def column_stats(codes):
    """Per-column information gain, split information and group count.

    Same contract and accumulation order as the pure backend: null
    group (code -1) first, then codes ascending.
    """
    cdef cnp.int32_t[:, :] view = np.ascontiguousarray(codes, dtype=np.int32)
    cdef Py_ssize_t n = view.shape[0]
    cdef Py_ssize_t m = view.shape[1]
    gains = np.zeros(m, dtype=np.float64)
    splits = np.zeros(m, dtype=np.float64)
    ngroups = np.zeros(m, dtype=np.int64)
    if n == 0:
        return gains, splits, ngroups
    cdef cnp.float64_t[:] gain_view = gains
    cdef cnp.float64_t[:] split_view = splits
    cdef cnp.int64_t[:] group_view = ngroups
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[:] counts = counts_arr
    cdef Py_ssize_t i, j, c
    cdef cnp.int32_t code
    cdef Py_ssize_t maxcode
    cdef double total_bits = log2(<double> n)
    cdef double expected, split, p
    cdef cnp.int64_t count
    cdef Py_ssize_t groups
    for j in range(m):
        for i in range(n + 1):
            counts[i] = 0
        maxcode = -1
        for i in range(n):
            code = view[i, j]
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
                p = (<double> count) / (<double> n)
                expected += p * log2(<double> count)
                split -= p * log2(p)
        gain_view[j] = total_bits - expected
        split_view[j] = split
        group_view[j] = groups
    return gains, splits, ngroups
