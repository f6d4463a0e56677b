"""Batch evaluation of Wigner angles and Mermin correlations over grids.

The compiled extension is used when it imports; set ``GHZBOOST_PURE_PYTHON=1``
to force the numpy fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("GHZBOOST_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

evaluate_grid = _impl.evaluate_grid
wigner_angles = _impl.wigner_angles

__all__ = ["BACKEND", "evaluate_grid", "wigner_angles"]
