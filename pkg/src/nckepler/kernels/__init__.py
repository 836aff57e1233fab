"""Hot numerical kernels with two interchangeable backends.

``_fast`` is a compiled Cython extension; ``_pure`` is a vectorized
numpy implementation of the same recurrences and reductions.  The
compiled backend is preferred when the extension built successfully;
set ``NCKEPLER_PURE=1`` to force the fallback (the benchmark and the
backend-agreement tests do this).
"""

import os

from . import _pure

if os.environ.get("NCKEPLER_PURE"):
    _backend = _pure
    BACKEND = "pure"
else:
    try:
        from . import _fast as _backend

        BACKEND = "compiled"
    except ImportError:
        _backend = _pure
        BACKEND = "pure"

jacobi_values = _backend.jacobi_values
laguerre_values = _backend.laguerre_values
gegenbauer2_values = _backend.gegenbauer2_values
oscillatory_power_sum = _backend.oscillatory_power_sum

__all__ = [
    "BACKEND",
    "jacobi_values",
    "laguerre_values",
    "gegenbauer2_values",
    "oscillatory_power_sum",
]
