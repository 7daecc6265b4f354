"""Propagation kernel selection.

The compiled kernel is optional: if the extension failed to build, or the
ODDWALK_PURE environment variable is set to 1, everything runs on the pure
Python kernel.  The compiled kernel only handles targets whose vertex and
witness counts fit a 64-bit word; larger targets always use the pure path.
Both kernels implement the same contract and the tests compare them.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("ODDWALK_PURE") == "1":
    _native = None
else:
    try:
        from . import _native
    except ImportError:
        _native = None

NATIVE_LIMIT = 64


def native_available() -> bool:
    return _native is not None


def backend_for(n_vertices: int, n_witnesses: int) -> str:
    if _native is not None and n_vertices <= NATIVE_LIMIT and n_witnesses <= NATIVE_LIMIT:
        return "native"
    return "pure"


def path_propagate(vmasks, wmasks, wit_ends, n_vertices: int, n_witnesses: int):
    """Arc-consistency pass over a path profile; see kernels.pure."""
    if backend_for(n_vertices, n_witnesses) == "native":
        return _native.path_propagate(vmasks, wmasks, wit_ends)
    return pure.path_propagate(vmasks, wmasks, wit_ends)
