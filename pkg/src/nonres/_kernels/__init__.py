"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``NONRES_KERNELS=pure`` in the environment to force the fallback (used
by the benchmark and by tests that compare the two implementations).
"""

import os

from . import _pure

if os.environ.get("NONRES_KERNELS", "").lower() == "pure":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

bareiss_rank = _impl.bareiss_rank
poly_mul_reduce = _impl.poly_mul_reduce


def backends():
    """All importable kernel implementations, keyed by name."""
    found = {"pure": _pure}
    try:
        from . import _speedups

        found["compiled"] = _speedups
    except ImportError:
        pass
    return found
