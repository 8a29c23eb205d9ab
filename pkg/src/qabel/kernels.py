"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``QABEL_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by the kernel-equivalence tests).
"""

import os

from . import _purepy

if os.environ.get("QABEL_PURE_PYTHON"):
    _impl = _purepy
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _purepy

BACKEND = "python" if _impl is _purepy else "cython"

partition_histograms = _impl.partition_histograms
mul_poch_range = _impl.mul_poch_range
div_poch_range = _impl.div_poch_range
descending_product_sum = _impl.descending_product_sum
horner = _impl.horner

__all__ = [
    "BACKEND",
    "partition_histograms",
    "mul_poch_range",
    "div_poch_range",
    "descending_product_sum",
    "horner",
]
