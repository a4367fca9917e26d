"""Backend selection for the exact inertia kernel.

The compiled Cython kernel is used when it imports; otherwise, or when the
environment variable ``GAINRANK_PURE_PYTHON`` is set, the pure-Python kernel
runs. The compiled kernel works in int64 and hands over to the Python kernel
on overflow, so both backends return identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("GAINRANK_PURE_PYTHON"):
        raise ImportError("pure Python backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def py_gaussian_inertia(re, im) -> tuple[int, int, int]:
    return _pykernels.gaussian_inertia(re, im)


def gaussian_inertia(re, im) -> tuple[int, int, int]:
    """Exact ``(i_plus, i_minus, i_zero)`` of the Hermitian Gaussian-integer matrix ``re + i*im``."""
    if _ckernels is not None:
        try:
            return _ckernels.gaussian_inertia(re, im)
        except OverflowError:
            pass
    return _pykernels.gaussian_inertia(re, im)
