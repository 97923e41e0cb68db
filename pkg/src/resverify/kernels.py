"""Kernel backend selection.

Imports the compiled Cython kernels when present, else the pure-Python
reference implementations.  RESVERIFY_PURE_KERNELS=1 forces the pure
path (the benchmark uses this to compare both).
"""

import os

from ._kernels_py import ExponentOverflow  # single exception type for both backends

if os.environ.get("RESVERIFY_PURE_KERNELS"):
    _impl = None
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = None

if _impl is not None:
    mul_dicts = _impl.mul_dicts
    addmul_term = _impl.addmul_term
    bareiss_det_int = _impl.bareiss_det_int
    BACKEND = "cython"
else:
    from ._kernels_py import mul_dicts, addmul_term, bareiss_det_int
    BACKEND = "python"

__all__ = ["mul_dicts", "addmul_term", "bareiss_det_int", "ExponentOverflow", "BACKEND"]
