"""Backend dispatch for the hot batch kernels.

The compiled Cython module is used when available; otherwise the numpy
implementation takes over. Set ``MUMKIT_PURE_PYTHON=1`` before import to
force the numpy path (useful for benchmarking and debugging). The active
backend name is exposed as ``BACKEND``.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MUMKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

ZERO_CUTOFF = _kernels_py.ZERO_CUTOFF

measure_batch = _impl.measure_batch
shannon_rows = _impl.shannon_rows
renyi_rows = _impl.renyi_rows
min_entropy_rows = _impl.min_entropy_rows
tsallis_rows = _impl.tsallis_rows
coincidence_rows = _impl.coincidence_rows
