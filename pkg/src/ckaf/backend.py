"""Backend selection for the hot per-sample loops.

The environment variable CKAF_BACKEND picks the implementation:

    auto   (default) numba-jitted loops when numba imports, numpy otherwise
    numba  force the jitted loops; error if numba is unavailable
    numpy  force the pure-numpy reference loops

The variable is read on every dispatch, so flipping it between calls (as
the backend benchmark does) takes effect immediately. Both backends
implement the same arithmetic; tests assert their error sequences agree.
"""

from __future__ import annotations

import os

ENV_VAR = "CKAF_BACKEND"

_numba_ok: bool | None = None


def numba_available() -> bool:
    global _numba_ok
    if _numba_ok is None:
        try:
            import numba  # noqa: F401
            _numba_ok = True
        except ImportError:
            _numba_ok = False
    return _numba_ok


def backend_choice() -> str:
    """Resolve the active backend name ('numba' or 'numpy')."""
    val = os.environ.get(ENV_VAR, "auto").strip().lower()
    if val in ("", "auto"):
        return "numba" if numba_available() else "numpy"
    if val == "numpy":
        return "numpy"
    if val == "numba":
        if not numba_available():
            raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
        return "numba"
    raise ValueError(f"invalid {ENV_VAR}={val!r}; use auto, numba or numpy")
