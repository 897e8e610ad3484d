"""Kernel selection: the compiled extension when importable, else the numpy fallback.

Set ``COENDKIT_PURE_PYTHON=1`` to force the fallback.
"""
import os

kernels = None
if not os.environ.get("COENDKIT_PURE_PYTHON"):
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = None
if kernels is None:
    from . import _fallback as kernels

BACKEND = kernels.NAME
