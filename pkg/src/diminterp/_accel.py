"""Numba acceleration switch.

Hot numeric kernels are compiled with numba when available.  Setting the
environment variable ``DIMINTERP_DISABLE_NUMBA=1`` (before import) selects the
pure-numpy fallback, which produces identical results.
"""

import os

_DISABLE_VALUES = {"1", "true", "yes", "on"}


def numba_enabled() -> bool:
    if os.environ.get("DIMINTERP_DISABLE_NUMBA", "").lower() in _DISABLE_VALUES:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = numba_enabled()


def maybe_njit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func
