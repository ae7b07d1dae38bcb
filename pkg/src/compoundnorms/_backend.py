"""Pick the kernel implementation at import time.

Set ``COMPOUNDNORMS_BACKEND=python`` to force the numpy fallback, or
``COMPOUNDNORMS_BACKEND=cython`` to fail loudly when the extension is missing.
"""

import os

BACKEND_ENV = "COMPOUNDNORMS_BACKEND"

_requested = os.environ.get(BACKEND_ENV, "").strip().lower()

if _requested == "python":
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _requested == "cython":
            raise
        from . import _pykernels as kernels

BACKEND = kernels.NAME


def available_backends():
    """Names and modules of every kernel implementation importable here."""
    from . import _pykernels

    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
