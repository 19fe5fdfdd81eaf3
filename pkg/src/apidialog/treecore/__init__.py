"""Gain computation kernels with a compiled fast path.

The compiled extension is preferred when it built; the pure-Python
fallback is always available and behavior-identical. Set
``APIDIALOG_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import pure

_FORCE_PURE = os.environ.get("APIDIALOG_PURE", "").lower() in ("1", "true", "yes")

_impl = pure
BACKEND = "pure"
if not _FORCE_PURE:
    try:
        from . import _gainkernel  # type: ignore[attr-defined]

        _impl = _gainkernel
        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        pass


def column_stats(codes):
    """(gains, split_infos, group_counts) per column of the encoded table.

    Codes must come from an attribute-table encoding: -1 for null, else
    0..k-1 with k <= n_rows. The compiled kernel sizes its buffers by
    the row count, so out-of-range codes are rejected here instead of
    corrupting memory there.
    """
    codes = np.asarray(codes, dtype=np.int32)
    if codes.size and int(codes.max()) >= codes.shape[0]:
        raise ValueError(
            f"cell code {int(codes.max())} out of range for {codes.shape[0]} rows"
        )
    return _impl.column_stats(codes)


def backend() -> str:
    """Which kernel is active: "compiled" or "pure"."""
    return BACKEND


__all__ = ["column_stats", "backend", "pure", "BACKEND"]
