"""Kernel backend selection.

The compiled Cython extension is used when present; otherwise the numpy
reference implementation takes over.  Set ``QPBURST_PURE_PYTHON=1`` to force
the fallback (used by the benchmark and the backend-parity tests).
"""

import os

from ._pure import binom_log_comb  # vectorised setup work, shared by both backends

if os.environ.get("QPBURST_PURE_PYTHON"):
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND_NAME

survival_exponent = _impl.survival_exponent
waveform_loglik = _impl.waveform_loglik
simulate_outcomes = _impl.simulate_outcomes
rk4_rothwarf = _impl.rk4_rothwarf

__all__ = [
    "BACKEND",
    "binom_log_comb",
    "survival_exponent",
    "waveform_loglik",
    "simulate_outcomes",
    "rk4_rothwarf",
]
