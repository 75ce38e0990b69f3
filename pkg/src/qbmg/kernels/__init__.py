"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled extension is used when it was built and imports cleanly;
set ``QBMG_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("QBMG_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        _impl = _ckernels
        BACKEND = "cython"

FORWARD, BACKWARD, BOTH = _pykernels.FORWARD, _pykernels.BACKWARD, _pykernels.BOTH
# compiled kernels hold masks in 64-bit words
MAX_COMPILED_VERTICES = 64


def axioms_hold(out):
    if _impl is not _pykernels and len(out) > MAX_COMPILED_VERTICES:
        return _pykernels.axioms_hold(out)
    return _impl.axioms_hold(out)


def search_assignments(n, edges, first_only=False, collect=True):
    if _impl is not _pykernels and n > MAX_COMPILED_VERTICES:
        return _pykernels.search_assignments(n, edges, first_only, collect)
    return _impl.search_assignments(n, edges, first_only, collect)


def compiled_module():
    """The compiled kernel module, or None when it is not available."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
