"""Peak finding on sampled time series."""

from __future__ import annotations

import numpy as np

__all__ = ["local_maxima", "peak_spacing_spread"]


def local_maxima(t, y) -> tuple[np.ndarray, np.ndarray]:
    """Interior local maxima of ``y(t)`` refined by a three-point parabola.

    A sample counts as a maximum when it is strictly above its left
    neighbour and not below its right one.  Returns ``(t_peak, y_peak)``.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if t.shape != y.shape or t.ndim != 1:
        raise ValueError("t and y must be 1-d arrays of equal length")
    if t.size < 3:
        return np.empty(0), np.empty(0)
    i = np.flatnonzero((y[1:-1] > y[:-2]) & (y[1:-1] >= y[2:])) + 1
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    curv = y0 - 2.0 * y1 + y2
    with np.errstate(divide="ignore", invalid="ignore"):
        shift = np.where(curv != 0.0, 0.5 * (y0 - y2) / curv, 0.0)
    h = 0.5 * (t[i + 1] - t[i - 1])
    return t[i] + shift * h, y1 - 0.25 * (y0 - y2) * shift


def peak_spacing_spread(t, y) -> tuple[float, float, int]:
    """Median spacing between successive maxima and the largest relative deviation from it.

    Returns ``(median, spread, count)``; ``spread`` is ``inf`` with fewer
    than three maxima.
    """
    tp, _ = local_maxima(t, y)
    if tp.size < 3:
        return float("nan"), float("inf"), int(tp.size)
    gaps = np.diff(tp)
    med = float(np.median(gaps))
    return med, float(np.max(np.abs(gaps / med - 1.0))), int(tp.size)
