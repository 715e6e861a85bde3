"""Hot kernels: compiled extension when available, numpy fallback otherwise.

Set ``FQDIOPH_PURE=1`` to force the pure-Python backend.
"""

import os

from . import _pykernels as python

try:
    if os.environ.get("FQDIOPH_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

kernels = compiled if compiled is not None else python
BACKEND = kernels.BACKEND


def available_backends():
    return [k for k in (compiled, python) if k is not None]
