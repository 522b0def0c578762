"""Select the polynomial kernel at import time.

The compiled extension is used when present; DL_PURE=1 forces the
pure-Python fallback.  Both expose the same functions with identical
results, and benchmarks/bench_kernel.py times them side by side.
"""

import os

if os.environ.get("DL_PURE"):
    from . import _purekernel as impl
else:
    try:
        from . import _fastkernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernel as impl

poly_mul = impl.poly_mul
poly_scale = impl.poly_scale
IMPL_NAME = impl.__name__.rsplit(".", 1)[-1]
