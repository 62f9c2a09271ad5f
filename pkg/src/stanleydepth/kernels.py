"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``STANLEYDEPTH_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _purekernels

BACKEND = "python"
coverage_scan = _purekernels.coverage_scan
exact_cover = _purekernels.exact_cover

if os.environ.get("STANLEYDEPTH_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        coverage_scan = _ckernels.coverage_scan
        exact_cover = _ckernels.exact_cover

__all__ = ["BACKEND", "coverage_scan", "exact_cover"]
