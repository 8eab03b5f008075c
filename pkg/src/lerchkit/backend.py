"""Kernel backend selection.

The environment variable ``LERCHKIT_BACKEND`` picks the implementation of the
hot numeric kernels at import time:

* ``auto`` (default, also the empty string): numba if it imports, else numpy
* ``numba``: require the compiled kernels, raise if numba is unavailable
* ``numpy``: force the pure-numpy fallback

The two backends implement identical math; the choice affects speed only.
Numerical configuration (tolerances, term caps) is never read from the
environment -- it travels explicitly through ``SeriesParams`` and CLI flags.
"""
from __future__ import annotations

import os

__all__ = [
    "BACKEND",
    "sum_inv_pow",
    "sum_alt_inv_pow",
    "lerch_sum",
    "lerch_partial_sums",
    "eta_integrand",
    "segment_integrand",
]

_choice = os.environ.get("LERCHKIT_BACKEND", "auto").strip().lower() or "auto"
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"LERCHKIT_BACKEND={_choice!r} not understood; use auto, numba or numpy")

if _choice == "numpy":
    from . import _kernels_numpy as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as _impl  # type: ignore[no-redef]

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as _impl  # type: ignore[no-redef]

        BACKEND = "numpy"

sum_inv_pow = _impl.sum_inv_pow
sum_alt_inv_pow = _impl.sum_alt_inv_pow
lerch_sum = _impl.lerch_sum
lerch_partial_sums = _impl.lerch_partial_sums
eta_integrand = _impl.eta_integrand
segment_integrand = _impl.segment_integrand
