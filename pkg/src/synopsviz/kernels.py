"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SYNOPSVIZ_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two implementations).
"""

import os

from . import _kernels_py

if os.environ.get("SYNOPSVIZ_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
slice_stats = _impl.slice_stats
degree_counts = _impl.degree_counts
