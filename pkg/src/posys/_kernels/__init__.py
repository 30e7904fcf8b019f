"""Kernel backend selection.

The compiled extension is preferred when importable; the NumPy fallback is
used otherwise.  Set ``POSYS_KERNEL=numpy`` or ``POSYS_KERNEL=compiled`` to
force a backend (forcing an unavailable compiled backend raises).
"""

import os

from . import _numpy

_requested = os.environ.get("POSYS_KERNEL", "").strip().lower()
if _requested not in ("", "numpy", "compiled"):
    raise ImportError(f"POSYS_KERNEL must be 'numpy' or 'compiled', got {_requested!r}")

_impl = None
if _requested != "numpy":
    try:
        from . import _core as _impl
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = None
if _impl is None:
    _impl = _numpy

BACKEND = _impl.BACKEND
po_sf = _impl.po_sf
series_log_sf = _impl.series_log_sf
series_hazard_factor = _impl.series_hazard_factor
parallel_log_cdf = _impl.parallel_log_cdf
parallel_rhr_factor = _impl.parallel_rhr_factor

__all__ = [
    "BACKEND",
    "po_sf",
    "series_log_sf",
    "series_hazard_factor",
    "parallel_log_cdf",
    "parallel_rhr_factor",
]
