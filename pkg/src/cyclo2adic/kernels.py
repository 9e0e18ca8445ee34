"""Kernel dispatch: the compiled ``_core`` extension when built, else ``_fallback``.

Set ``CYCLO2ADIC_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _fallback

if os.environ.get("CYCLO2ADIC_PURE"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback
        BACKEND = "python"
    else:
        BACKEND = "compiled"

det_mod_prime = _impl.det_mod_prime
berlekamp_massey = _impl.berlekamp_massey

__all__ = ["BACKEND", "det_mod_prime", "berlekamp_massey"]
