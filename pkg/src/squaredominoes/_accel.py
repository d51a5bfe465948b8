"""Optional numba acceleration.

Set ``SQUAREDOMINOES_NO_NUMBA=1`` to run the kernels as plain Python over
numpy arrays.  The flag is read once at import time.
"""

import os

DISABLED = os.environ.get("SQUAREDOMINOES_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

njit = None
if not DISABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _njit = None
    if _njit is not None:
        def njit(fn):
            return _njit(cache=True, nogil=True)(fn)

ENABLED = njit is not None

if njit is None:
    def njit(fn):
        return fn
