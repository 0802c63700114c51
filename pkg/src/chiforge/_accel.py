"""Backend selection for the hot kernels.

Set ``CHIFORGE_DISABLE_NUMBA=1`` to force the pure-numpy path. When numba is
missing the numpy path is used as well.
"""

from __future__ import annotations

import os

_FLAG = "CHIFORGE_DISABLE_NUMBA"


def _env_disabled() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_disabled()


def njit(func):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise."""
    if numba is None:
        return func
    return numba.njit(cache=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
