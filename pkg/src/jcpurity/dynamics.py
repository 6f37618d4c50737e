"""Closed-form JC and anti-JC evolution of a ground-state atom in a coherent field.

The atom starts in ``|g>`` and the field in a real coherent state ``|alpha>``.
Time is always the scaled time ``tau = g*t``, so Rabi frequencies enter as
``R/g`` and the free field phase as ``omega*t = f*tau``.

Parameters
----------
beta : red-sideband detuning ``delta/g``
f : field frequency ``omega/g``; the aJC model sees the blue-sideband
    detuning ``(beta + 2f) g``
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _backend
from .core import BlochFourVector
from .errors import NonConvergent, TruncationError

__all__ = [
    "DEFAULT_TAIL_BOUND",
    "FockTruncation",
    "Model",
    "ModelParams",
    "QubitAmplitudes",
    "ajc_coefficients",
    "bloch_ajc",
    "bloch_jc",
    "bloch_series",
    "evaluate",
    "jc_coefficients",
    "joint_amplitudes",
    "poisson_weights",
]

DEFAULT_TAIL_BOUND = 1e-12
N_MAX_FLOOR = 32
N_MAX_CAP = 4096


class Model(str, enum.Enum):
    JC = "jc"
    AJC = "ajc"


@dataclass(frozen=True)
class ModelParams:
    model: Model
    alpha: float
    beta: float = 0.0
    f: float = 1e-7
    g: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        for name in ("alpha", "beta", "f", "g"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValueError(f"{name} must be finite, got {val!r}")
            object.__setattr__(self, name, val)
        if self.g <= 0.0:
            raise ValueError(f"coupling g must be positive, got {self.g!r}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha!r}")
        if self.f < 0.0:
            raise ValueError(f"f must be non-negative, got {self.f!r}")

    @property
    def blue_detuning(self) -> float:
        """Dimensionless aJC detuning ``beta + 2f``."""
        return self.beta + 2.0 * self.f


@dataclass(frozen=True)
class FockTruncation:
    n_max: int
    tail_bound: float = DEFAULT_TAIL_BOUND

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"n_max must be a positive integer, got {self.n_max!r}")
        if not 0.0 < self.tail_bound < 1.0:
            raise ValueError(f"tail_bound must lie in (0, 1), got {self.tail_bound!r}")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def norm_tolerance(self) -> float:
        return 10.0 * self.tail_bound


def _poisson_table(alpha: float, n_stop: int) -> np.ndarray:
    """Poisson(alpha**2) probabilities for n = 0..n_stop.

    Recurrence runs outward from the mode so neither direction under- or
    overflows before it has to.
    """
    p = np.zeros(n_stop + 1)
    mean = alpha * alpha
    if mean == 0.0:
        p[0] = 1.0
        return p
    mode = min(int(mean), n_stop)
    if mode == 0:
        p[0] = math.exp(-mean)
    else:
        p[mode] = math.exp(-mean + mode * math.log(mean) - math.lgamma(mode + 1))
    for n in range(mode, n_stop):
        p[n + 1] = p[n] * mean / (n + 1)
    for n in range(mode, 0, -1):
        p[n - 1] = p[n] * n / mean
    return p


def poisson_weights(alpha: float, tail_bound: float = DEFAULT_TAIL_BOUND,
                    cap: int = N_MAX_CAP) -> tuple[np.ndarray, FockTruncation]:
    """Photon-number probabilities of ``|alpha>`` and the cutoff that keeps them.

    ``n_max`` is the smallest index whose accumulated probability reaches
    ``1 - tail_bound``, but never below 32.  Raises :class:`NonConvergent`
    if that needs more than ``cap`` Fock states.

    >>> w, trunc = poisson_weights(1.0)
    >>> round(w[0], 7), trunc.n_max
    (0.3678794, 32)
    """
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise ValueError(f"alpha must be finite and non-negative, got {alpha!r}")
    if not 0.0 < tail_bound < 1.0:
        raise ValueError(f"tail_bound must lie in (0, 1), got {tail_bound!r}")

    # mean + 12 sigma + slack covers any sane tail bound; the scan below trims it
    guess = int(alpha * alpha + 12.0 * alpha + 64)
    table = _poisson_table(alpha, min(guess, cap))
    target = 1.0 - tail_bound
    mass = 0.0
    n_max = None
    for n, pn in enumerate(table):
        mass += pn
        if mass >= target:
            n_max = n
            break
    if n_max is None:
        raise NonConvergent(
            f"Poisson tail for alpha={alpha} stays above {tail_bound:g} "
            f"within {cap} Fock states"
        )
    n_max = max(n_max, N_MAX_FLOOR)
    if n_max >= table.shape[0]:
        table = _poisson_table(alpha, n_max)
    return table[: n_max + 1].copy(), FockTruncation(n_max, tail_bound)


@lru_cache(maxsize=64)
def _weights(alpha: float, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    p = _poisson_table(alpha, n_max)
    sq = np.sqrt(p)
    p.flags.writeable = False
    sq.flags.writeable = False
    return p, sq


def jc_coefficients(n: int, params: ModelParams) -> tuple[float, float, float]:
    """``(R_n, c_n, s_n)`` of the JC doublet ``{|g,n>, |e,n-1>}``.

    ``R_n = g sqrt(n + beta**2/4)``, ``c_n = beta g / (2 R_n)``,
    ``s_n = g sqrt(n) / R_n``.  The empty resonant doublet (``R_0 = 0``)
    returns ``(0, 1, 0)``.
    """
    if n < 0:
        raise ValueError(f"Fock index must be non-negative, got {n}")
    g, beta = params.g, params.beta
    rabi = g * math.sqrt(n + 0.25 * beta * beta)
    if rabi == 0.0:
        return 0.0, 1.0, 0.0
    return rabi, beta * g / (2.0 * rabi), g * math.sqrt(n) / rabi


def ajc_coefficients(m: int, params: ModelParams) -> tuple[float, float, float]:
    """``(Rbar_m, cbar_m, sbar_m)`` of the aJC doublet ``{|g,m-1>, |e,m>}``.

    The cosine uses the blue-sideband detuning ``(beta + 2f) g``, which keeps
    ``cbar**2 + sbar**2 = 1``.
    """
    if m < 0:
        raise ValueError(f"Fock index must be non-negative, got {m}")
    g, d = params.g, params.blue_detuning
    rabi = g * math.sqrt(m + 0.25 * d * d)
    if rabi == 0.0:
        return 0.0, 1.0, 0.0
    return rabi, d * g / (2.0 * rabi), g * math.sqrt(m) / rabi


def _manifolds(params: ModelParams, n_max: int):
    """Scaled Rabi frequency, cosine and sine for manifolds k = 0..n_max.

    Manifold k is the doublet reached from ``|g,k>``.
    """
    k = np.arange(n_max + 1, dtype=float)
    if params.model is Model.JC:
        d, m = params.beta, k
    else:
        d, m = params.blue_detuning, k + 1.0
    omega = np.sqrt(m + 0.25 * d * d)
    safe = np.where(omega > 0.0, omega, 1.0)
    cpar = np.where(omega > 0.0, 0.5 * d / safe, 1.0)
    spar = np.where(omega > 0.0, np.sqrt(m) / safe, 0.0)
    return omega, cpar, spar


def bloch_series(params: ModelParams, taus, trunc: FockTruncation | None = None,
                 num_threads: int = 1, kernel=None) -> np.ndarray:
    """Bloch components ``(r0, r1, r2, r3)`` at each scaled time in ``taus``.

    Returns a ``(len(taus), 4)`` array.  ``r0`` is the summed population of
    the truncated series; a deviation from 1 larger than ten tail bounds
    raises :class:`TruncationError` naming the first offending time.
    ``kernel`` overrides the import-time backend choice.
    """
    if trunc is None:
        trunc = poisson_weights(params.alpha)[1]
    taus = np.ascontiguousarray(np.atleast_1d(np.asarray(taus, dtype=float)))
    if taus.ndim != 1:
        raise ValueError("taus must be one-dimensional")
    if np.any(taus < 0.0) or not np.all(np.isfinite(taus)):
        raise ValueError("scaled times must be finite and non-negative")
    weight, sqrt_weight = _weights(params.alpha, trunc.n_max)
    omega, cpar, spar = _manifolds(params, trunc.n_max)
    kernel = kernel or _backend.bloch_series
    out = np.asarray(kernel(
        weight, sqrt_weight, omega, cpar, spar, taus,
        params.f, params.model is Model.AJC, num_threads,
    ))
    bad = np.flatnonzero(np.abs(out[:, 0] - 1.0) > trunc.norm_tolerance)
    if bad.size:
        i = bad[0]
        raise TruncationError(
            f"r0 = {out[i, 0]!r} at tau = {taus[i]!r} misses 1 by more than "
            f"{trunc.norm_tolerance:g} (n_max = {trunc.n_max})",
            tau=float(taus[i]),
        )
    return out


def evaluate(params: ModelParams, tau: float,
             trunc: FockTruncation | None = None) -> BlochFourVector:
    """Bloch four-vector at one scaled time, for either model."""
    r = bloch_series(params, [tau], trunc)[0]
    return BlochFourVector(*r)


def bloch_jc(params: ModelParams, tau: float,
             trunc: FockTruncation | None = None) -> BlochFourVector:
    if params.model is not Model.JC:
        raise ValueError("bloch_jc needs a JC model")
    return evaluate(params, tau, trunc)


def bloch_ajc(params: ModelParams, tau: float,
              trunc: FockTruncation | None = None) -> BlochFourVector:
    if params.model is not Model.AJC:
        raise ValueError("bloch_ajc needs an aJC model")
    return evaluate(params, tau, trunc)


@dataclass(frozen=True)
class QubitAmplitudes:
    """Per-Fock-index amplitudes of the evolved joint state.

    ``ground[n]`` and ``excited[n]`` are the coefficients of ``|g>|n>`` and
    ``|e>|n>``, free phase factors included.  ``xi[n]`` / ``eta[n]`` are the
    qubit factors multiplying them (``xi_n``, ``eta_{n+1}`` for JC;
    ``xibar_{n+1}``, ``etabar_n`` for aJC).
    """

    ground: np.ndarray
    excited: np.ndarray
    xi: np.ndarray
    eta: np.ndarray

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.ground) ** 2) + np.sum(np.abs(self.excited) ** 2))


def joint_amplitudes(params: ModelParams, tau: float,
                     trunc: FockTruncation | None = None) -> QubitAmplitudes:
    """Evolved atom-field amplitudes, built term by term from the doublet rotations."""
    if trunc is None:
        trunc = poisson_weights(params.alpha)[1]
    weight, _ = _weights(params.alpha, trunc.n_max)
    size = trunc.n_max + 2
    ground = np.zeros(size, dtype=complex)
    excited = np.zeros(size, dtype=complex)
    xi = np.zeros(size, dtype=complex)
    eta = np.zeros(size)
    t = tau / params.g
    wt = params.f * tau

    def amp(n):
        return math.sqrt(weight[n]) if 0 <= n <= trunc.n_max else 0.0

    if params.model is Model.JC:
        for n in range(size):
            rn, cn, _ = jc_coefficients(n, params)
            r1, _, s1 = jc_coefficients(n + 1, params)
            xi[n] = complex(math.cos(rn * t), cn * math.sin(rn * t))
            eta[n] = s1 * math.sin(r1 * t)
            ground[n] = amp(n) * cmath.exp(-1j * wt * n) * xi[n]
            excited[n] = -1j * amp(n + 1) * cmath.exp(-1j * wt * (n + 1)) * eta[n]
    else:
        for n in range(size):
            r1, c1, _ = ajc_coefficients(n + 1, params)
            rn, _, sn = ajc_coefficients(n, params)
            xi[n] = complex(math.cos(r1 * t), c1 * math.sin(r1 * t))
            eta[n] = sn * math.sin(rn * t)
            ground[n] = amp(n) * cmath.exp(-1j * wt * (n + 1)) * xi[n]
            excited[n] = -1j * amp(n - 1) * cmath.exp(-1j * wt * n) * eta[n]

    result = QubitAmplitudes(ground, excited, xi, eta)
    if abs(result.norm_sq - 1.0) > trunc.norm_tolerance:
        raise TruncationError(
            f"joint state norm {result.norm_sq!r} at tau = {tau!r} misses 1",
            tau=float(tau),
        )
    return result
