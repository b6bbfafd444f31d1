"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``MULTALG_PURE_PYTHON=1`` in the environment to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("MULTALG_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]


def use_backend(name: str) -> None:
    """Switch the active backend (``"cython"`` or ``"python"``)."""
    global BACKEND, _impl
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    BACKEND = name
    _impl = BACKENDS[name]


def rref_modp(rows, ncols, p):
    return _impl.rref_modp(rows, ncols, p)


def match_pairs(left_keys, right_keys):
    return _impl.match_pairs(left_keys, right_keys)
