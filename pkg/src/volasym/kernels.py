"""Backend selector for the numeric kernels.

Prefers the compiled extension when importable; falls back to the numpy
implementation. VOLASYM_PURE_PYTHON=1 forces the fallback. Both backends are
bit-identical by construction, so selection never changes results.
"""

import os

from volasym import _kernels_py

if os.environ.get("VOLASYM_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from volasym import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

fill_uint64 = _impl.fill_uint64
fill_uniform = _impl.fill_uniform
fill_normals = _impl.fill_normals
norm_inv = _impl.norm_inv
ar1_path = _impl.ar1_path
gjr_returns = _impl.gjr_returns


def backend_name() -> str:
    return _impl.BACKEND
