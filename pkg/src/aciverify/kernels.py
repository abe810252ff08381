"""Kernel backend selection.

The compiled extension ``aciverify._kernels`` is used when it was built;
otherwise the pure-Python twin in ``_kernels_py`` is loaded.  Setting
``ACI_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("ACI_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

reduce_full = _impl.reduce_full
echelon_int = _impl.echelon_int
rank_int = _impl.rank_int
nullspace_int = _impl.nullspace_int

__all__ = ["BACKEND", "reduce_full", "echelon_int", "rank_int", "nullspace_int"]
