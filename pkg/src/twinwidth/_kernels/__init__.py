"""Kernel backend selection.

The replay, lb1, and merge-evaluation loops dominate the runtime of the
toolkit.  They exist twice: a numba-jitted version (default) and a pure
numpy version with identical semantics.  Set TWINWIDTH_KERNELS=numpy to
force the fallback, TWINWIDTH_KERNELS=numba to fail loudly if numba is
unavailable.  benchmarks/bench_kernels.py compares the two.
"""

import os

_requested = os.environ.get("TWINWIDTH_KERNELS", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy", ""):
    raise RuntimeError(
        f"TWINWIDTH_KERNELS must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_impl as _impl

        BACKEND = "numpy"

NONE = _impl.NONE
BLACK = _impl.BLACK
RED = _impl.RED

merge_step = _impl.merge_step
merge_eval = _impl.merge_eval
red_degrees = _impl.red_degrees
replay_widths = _impl.replay_widths
lb1_scan = _impl.lb1_scan
greedy_best_pair = _impl.greedy_best_pair


def backend_name():
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return BACKEND
