"""Kernel backend selection.

The compiled Cython sweep is preferred; the pure-Python implementation is a
drop-in replacement used when the extension was not built.
"""

from __future__ import annotations

try:
    from . import _kernels_c as _impl
    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _kernels_py as _impl
    BACKEND = "python"

riccati_sweep = _impl.riccati_sweep


def get_backend(name: str):
    """Return the kernel module for an explicit backend name
    ('cython' or 'python'); used by the benchmark."""
    if name == "python":
        from . import _kernels_py
        return _kernels_py
    if name == "cython":
        from . import _kernels_c
        return _kernels_c
    raise ValueError(f"unknown backend {name!r}")
