"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``CATALAN_CF_PURE`` is set to a non-empty value other
than ``0``, the pure-Python module is used.  Both expose the same functions.
"""
from __future__ import annotations

import os

from . import _purekernels as pure

compiled = None
if os.environ.get("CATALAN_CF_PURE", "") in ("", "0"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

contains = _impl.contains
avoiders = _impl.avoiders
vincular3_counts = _impl.vincular3_counts
vincular_avoiders = _impl.vincular_avoiders
vincular2_totals = _impl.vincular2_totals

__all__ = ["BACKEND", "compiled", "pure", "contains", "avoiders",
           "vincular3_counts", "vincular_avoiders", "vincular2_totals"]
