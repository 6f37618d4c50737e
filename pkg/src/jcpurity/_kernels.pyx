# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Bloch-series kernel.

The evolved state is a sum over Rabi manifolds ``k``; manifold ``k`` couples
``|g,k>`` to ``|e,k-1>`` (JC) or ``|e,k+1>`` (aJC).  Each manifold needs one
sin/cos pair per time point, and the coherence terms pair each manifold
with its predecessor, so the trig values are carried one step forward.
"""

import numpy as np

from cython.parallel cimport prange
from libc.math cimport cos, sin

cimport numpy as cnp

cnp.import_array()


cdef inline void _series_point(
    const double[::1] weight,
    const double[::1] sqrt_weight,
    const double[::1] omega,
    const double[::1] cpar,
    const double[::1] spar,
    double tau,
    double freq,
    bint anti,
    double* out,
) noexcept nogil:
    cdef Py_ssize_t k, n = weight.shape[0]
    cdef double sw = sin(freq * tau)
    cdef double cw = cos(freq * tau)
    cdef double pe = 0.0, pg = 0.0, r1 = 0.0, r2 = 0.0
    cdef double x, y, xp = 0.0, yp = 0.0, coh, ck, sk

    for k in range(n):
        x = cos(omega[k] * tau)
        y = sin(omega[k] * tau)
        ck = cpar[k]
        sk = spar[k]
        pg += weight[k] * (x * x + ck * ck * y * y)
        pe += weight[k] * sk * sk * y * y
        if k > 0:
            if anti:
                coh = 2.0 * sqrt_weight[k] * sqrt_weight[k - 1] * spar[k - 1] * yp
                r1 += coh * (sw * x - ck * cw * y)
                r2 += coh * (cw * x + ck * sw * y)
            else:
                coh = 2.0 * sqrt_weight[k] * sqrt_weight[k - 1] * sk * y
                r1 -= coh * (sw * xp + cpar[k - 1] * cw * yp)
                r2 += coh * (cw * xp - cpar[k - 1] * sw * yp)
        xp = x
        yp = y

    out[0] = pe + pg
    out[1] = r1
    out[2] = r2
    out[3] = pe - pg


def bloch_series(
    const double[::1] weight,
    const double[::1] sqrt_weight,
    const double[::1] omega,
    const double[::1] cpar,
    const double[::1] spar,
    const double[::1] taus,
    double freq,
    bint anti,
    int num_threads=1,
):
    """Evaluate ``(r0, r1, r2, r3)`` at every scaled time in ``taus``.

    Returns a ``(len(taus), 4)`` array.  Time points are independent, so
    the result does not depend on ``num_threads``.
    """
    cdef Py_ssize_t i, nt = taus.shape[0]
    out = np.empty((nt, 4), dtype=np.float64)
    cdef double[:, ::1] o = out
    if num_threads < 1:
        num_threads = 1
    with nogil:
        for i in prange(nt, num_threads=num_threads, schedule="static"):
            _series_point(weight, sqrt_weight, omega, cpar, spar,
                          taus[i], freq, anti, &o[i, 0])
    return out
