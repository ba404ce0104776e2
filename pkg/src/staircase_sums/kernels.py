"""Backend selection: compiled extension when available, pure Python otherwise.

Set ``STAIRCASE_SUMS_PURE=1`` to force the pure-Python lane.
"""

from __future__ import annotations

import os

if os.environ.get("STAIRCASE_SUMS_PURE"):
    from . import _kernels_py as _impl

    backend = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        backend = "c"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        backend = "python"

odd_divisors = _impl.odd_divisors
count_consecutive_runs = _impl.count_consecutive_runs
count_consecutive_runs_upto = _impl.count_consecutive_runs_upto
count_partitions = _impl.count_partitions
enumerate_partitions = _impl.enumerate_partitions
