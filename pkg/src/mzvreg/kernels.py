"""Expansion kernel selection.

The compiled extension is used when it imports; otherwise (or when
``MZVREG_PURE_PYTHON`` is set to a non-empty value) the pure-Python kernels
are used.  Inputs beyond the compiled kernel's 62-bit packing fall through to
the Python path.
"""
from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("MZVREG_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _kernels_py.BACKEND
_LIMIT = 62


def shuffle_counts(u, v) -> dict:
    if _compiled is not None and len(u) + len(v) <= _LIMIT:
        return _compiled.shuffle_counts(u, v)
    return _kernels_py.shuffle_counts(u, v)


def stuffle_counts(k, l) -> dict:
    if _compiled is not None and sum(k) + sum(l) <= _LIMIT:
        return _compiled.stuffle_counts(k, l)
    return _kernels_py.stuffle_counts(k, l)


def compiled_module():
    """The compiled kernel module, or ``None`` when unavailable."""
    return _compiled
