"""Backend selection for the hot kernels.

The Cython extension is used when it imports; otherwise (or when the
``ORTHOGUARD_PURE`` environment variable is non-empty) the pure-Python
twins in :mod:`orthoguard._pykernels` take over.  Both expose the same
functions with identical results.
"""

import os
import warnings

from . import _pykernels as pure

compiled = None
if not os.environ.get("ORTHOGUARD_PURE"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        warnings.warn("orthoguard: compiled kernels unavailable, using pure Python", RuntimeWarning)

active = compiled if compiled is not None else pure
BACKEND = "compiled" if compiled is not None else "pure"


def get(name: str):
    """Return the kernel module called ``name`` ("compiled", "pure" or "active")."""
    if name == "active":
        return active
    if name == "pure":
        return pure
    if name == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown backend {name!r}")
