"""Select the alignment kernel at import time.

The compiled extension is used when present; otherwise the pure-Python
implementation takes over with identical behavior.  Set ``TRANSLIPI_PURE=1``
to force the fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("TRANSLIPI_PURE"):
    from ._alignment_py import align_counts
    BACKEND = "python"
else:
    try:
        from ._alignment_cy import align_counts  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        from ._alignment_py import align_counts  # type: ignore[no-redef]
        BACKEND = "python"

__all__ = ["align_counts", "BACKEND"]
