"""Numpy implementation of the Bloch-series kernel.

Same contract as the compiled ``_kernels.bloch_series``; used when the
extension is not built.  Time points are processed in blocks so the
``(block, manifolds)`` work arrays stay small for large photon numbers.
"""

from __future__ import annotations

import numpy as np

BLOCK = 256


def bloch_series(weight, sqrt_weight, omega, cpar, spar, taus, freq, anti, num_threads=1):
    del num_threads  # accepted for signature parity
    weight = np.asarray(weight, dtype=float)
    sqrt_weight = np.asarray(sqrt_weight, dtype=float)
    omega = np.asarray(omega, dtype=float)
    cpar = np.asarray(cpar, dtype=float)
    spar = np.asarray(spar, dtype=float)
    taus = np.asarray(taus, dtype=float)

    out = np.empty((taus.shape[0], 4))
    pair = 2.0 * sqrt_weight[1:] * sqrt_weight[:-1]
    for start in range(0, taus.shape[0], BLOCK):
        t = taus[start:start + BLOCK, None]
        x = np.cos(omega * t)
        y = np.sin(omega * t)
        sw = np.sin(freq * t)
        cw = np.cos(freq * t)
        pg = (weight * (x * x + cpar * cpar * y * y)).sum(axis=1)
        pe = (weight * spar * spar * y * y).sum(axis=1)
        if anti:
            coh = pair * spar[:-1] * y[:, :-1]
            xg, yg, cg = x[:, 1:], y[:, 1:], cpar[1:]
            r1 = (coh * (sw * xg - cg * cw * yg)).sum(axis=1)
            r2 = (coh * (cw * xg + cg * sw * yg)).sum(axis=1)
        else:
            coh = pair * spar[1:] * y[:, 1:]
            xg, yg, cg = x[:, :-1], y[:, :-1], cpar[:-1]
            r1 = -(coh * (sw * xg + cg * cw * yg)).sum(axis=1)
            r2 = (coh * (cw * xg - cg * sw * yg)).sum(axis=1)
        block = out[start:start + t.shape[0]]
        block[:, 0] = pe + pg
        block[:, 1] = r1
        block[:, 2] = r2
        block[:, 3] = pe - pg
    return out
