"""Hot numeric kernels with a compiled core and a pure-Python fallback.

The compiled Cython module is preferred when it imports; otherwise the
numpy implementations take over with identical semantics.  Setting the
environment variable KMM_NO_EXT forces the fallback, which is also how
the benchmark and the cross-checking tests reach both backends.
"""

import os

from . import _pykernels

try:
    from . import _ckernels as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("KMM_NO_EXT"):
    _active = _compiled
    BACKEND = "compiled"
else:
    _active = _pykernels
    BACKEND = "python"

HAVE_EXT = _compiled is not None

expand_pure = _active.expand_pure
expectations = _active.expectations
star_accumulate = _active.star_accumulate
# dict-valued variant used above the dense-array cap; numpy path only
star_accumulate_sparse = _pykernels.star_accumulate_sparse


def implementations():
    """Name -> module map of every available backend (for tests/benchmarks)."""
    impls = {"python": _pykernels}
    if _compiled is not None:
        impls["compiled"] = _compiled
    return impls
