"""Selects the scoring-kernel implementation at import time.

The compiled extension (histselect._kernels) is preferred; the numpy
fallback (histselect._kernels_py) is used when the extension is missing.
Set HISTSELECT_BACKEND=python or HISTSELECT_BACKEND=cython to force one
side; forcing the extension raises if it was never built.
"""

from __future__ import annotations

import os

_forced = os.environ.get("HISTSELECT_BACKEND", "").lower()

if _forced in ("python", "numpy"):
    from . import _kernels_py as _impl

    HAVE_COMPILED = False
elif _forced in ("c", "cython", "compiled"):
    from . import _kernels as _impl  # type: ignore[attr-defined]

    HAVE_COMPILED = True
elif _forced:
    raise ValueError(f"unknown HISTSELECT_BACKEND value {_forced!r}")
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        from . import _kernels_py as _impl

        HAVE_COMPILED = False

discretize_matrix = _impl.discretize_matrix
fisher_scores = _impl.fisher_scores
chi2_scores = _impl.chi2_scores
infogain_scores = _impl.infogain_scores

FISHER_EPS = _impl.FISHER_EPS


def backend_name() -> str:
    return "cython" if HAVE_COMPILED else "numpy"
