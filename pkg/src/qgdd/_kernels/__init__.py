"""Hot kernels: compiled extension when available, numpy fallback otherwise.

Set ``QGDD_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_backend

try:
    if os.environ.get("QGDD_PURE_PYTHON") == "1":
        raise ImportError("pure-python backend requested")
    from . import _ckernels as cython_backend
except ImportError:
    cython_backend = None

_impl = cython_backend if cython_backend is not None else python_backend
BACKEND = "cython" if cython_backend is not None else "python"

span_combos = _impl.span_combos
rref_batch = _impl.rref_batch
enumerate_pattern = _impl.enumerate_pattern
ext_rank_batch = _impl.ext_rank_batch
ext_det_batch = _impl.ext_det_batch
scattered_mask = _impl.scattered_mask
accumulate_lines = _impl.accumulate_lines
block_line_ids = _impl.block_line_ids
rref_rows = python_backend.rref_rows

__all__ = [
    "BACKEND",
    "python_backend",
    "cython_backend",
    "span_combos",
    "rref_batch",
    "enumerate_pattern",
    "ext_rank_batch",
    "ext_det_batch",
    "scattered_mask",
    "accumulate_lines",
    "block_line_ids",
    "rref_rows",
]
