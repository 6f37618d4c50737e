"""Pick the Bloch-series kernel at import: compiled if available, numpy otherwise."""

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None:
    bloch_series = _compiled.bloch_series
    BACKEND = "cython"
else:
    bloch_series = _fallback.bloch_series
    BACKEND = "numpy"


def available_backends():
    """Map backend name to kernel for every kernel importable here."""
    kernels = {"numpy": _fallback.bloch_series}
    if _compiled is not None:
        kernels["cython"] = _compiled.bloch_series
    return kernels
