"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``CYLSKEW_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
count_by_composition = _pykernels.count_by_composition
lr_expand = _pykernels.lr_expand

if not os.environ.get("CYLSKEW_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        count_by_composition = _ckernels.count_by_composition
        lr_expand = _ckernels.lr_expand
        BACKEND = "cython"


def backends() -> dict:
    """Every importable backend, keyed by name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        return out
    out["cython"] = _ckernels
    return out
