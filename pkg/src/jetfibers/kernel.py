"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
kernels take over transparently.  Set JETFIBERS_PURE=1 to force the fallback
(useful for benchmarking and for debugging the extension).
"""

import os

if os.environ.get("JETFIBERS_PURE"):
    from . import _kernel_py as impl

    BACKEND = "python"
else:
    try:
        from . import _kernel as impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as impl  # type: ignore[no-redef]

        BACKEND = "python"

GREVLEX = impl.GREVLEX
LEX = impl.LEX
BLOCK = impl.BLOCK
