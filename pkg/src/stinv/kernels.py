"""Grid-point kernels, compiled when available.

The Cython build is used unless it failed to compile or ``STINV_PURE_PYTHON``
is set to a non-empty value; both backends return identical results.
"""
import os

if os.environ.get("STINV_PURE_PYTHON"):
    from ._kernels_py import BACKEND, clip_union, count_in_box, expand_box
else:
    try:
        from ._kernels import BACKEND, clip_union, count_in_box, expand_box
    except ImportError:
        from ._kernels_py import BACKEND, clip_union, count_in_box, expand_box

__all__ = ["BACKEND", "clip_union", "count_in_box", "expand_box"]
