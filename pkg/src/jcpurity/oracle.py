"""Brute-force cross-checks for the closed-form paths.

The reduced state is rebuilt by tracing the field out of the full joint
amplitude table, and eigenvalues are taken from the characteristic
polynomial of the raw matrix entries.  Neither route touches the Bloch
series kernel or the Bloch-angle eigensystem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import BlochFourVector, bloch_from_density, eigensystem
from .dynamics import (
    Model,
    ModelParams,
    QubitAmplitudes,
    bloch_series,
    joint_amplitudes,
    poisson_weights,
)
from .errors import ComplexRoots

__all__ = [
    "JointStateTable",
    "OracleReport",
    "eigen_bruteforce",
    "reduce_to_atom",
    "run_oracle_suite",
]

BLOCH_TOL = 1e-10
EIGEN_TOL = 1e-11

_LEVELS = ("e", "g")


@dataclass(frozen=True)
class JointStateTable:
    """Sparse atom-field state: ``(level, n, amplitude)`` triples, level in {"e", "g"}."""

    entries: tuple

    def __post_init__(self):
        clean = []
        for level, n, amp in self.entries:
            if level not in _LEVELS:
                raise ValueError(f"atomic level must be 'e' or 'g', got {level!r}")
            clean.append((level, int(n), complex(amp)))
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def from_amplitudes(cls, amps: QubitAmplitudes) -> "JointStateTable":
        rows = []
        for n, a in enumerate(amps.excited):
            if a != 0:
                rows.append(("e", n, a))
        for n, a in enumerate(amps.ground):
            if a != 0:
                rows.append(("g", n, a))
        return cls(tuple(rows))

    @property
    def norm_sq(self) -> float:
        return math.fsum(abs(a) ** 2 for _, _, a in self.entries)


def reduce_to_atom(state: JointStateTable) -> np.ndarray:
    """Trace out the field: ``rho[a, b] = sum_n amp(a, n) conj(amp(b, n))``."""
    by_n: dict[int, list[complex]] = {}
    for level, n, amp in state.entries:
        slot = by_n.setdefault(n, [0j, 0j])
        slot[_LEVELS.index(level)] += amp
    rho = np.zeros((2, 2), dtype=complex)
    for n in sorted(by_n):
        v = np.array(by_n[n])
        rho += np.outer(v, v.conj())
    return rho


def eigen_bruteforce(rho) -> tuple[float, float]:
    """Ascending eigenvalues of a Hermitian 2x2 matrix from its characteristic polynomial."""
    rho = np.asarray(rho, dtype=complex)
    tr = (rho[0, 0] + rho[1, 1]).real
    det = (rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real
    disc = tr * tr - 4.0 * det
    if disc < -1e-12:
        raise ComplexRoots(f"discriminant {disc!r} is negative")
    root = math.sqrt(max(disc, 0.0))
    # larger root first, smaller one from Vieta to dodge cancellation
    big = 0.5 * (tr + root) if tr >= 0.0 else 0.5 * (tr - root)
    small = det / big if big != 0.0 else 0.0
    return tuple(sorted((small, big)))


@dataclass
class OracleReport:
    samples: int
    bloch_tol: float
    eigen_tol: float
    bloch_worst: float = 0.0
    eigen_worst: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        head = (
            f"{self.samples} configurations: worst Bloch deviation "
            f"{self.bloch_worst:.3e} (tol {self.bloch_tol:g}), worst eigenvalue "
            f"deviation {self.eigen_worst:.3e} (tol {self.eigen_tol:g})"
        )
        lines = [head] + [f"  FAIL {msg}" for msg in self.failures]
        return "\n".join(lines)


def random_configuration(rng: np.random.Generator) -> tuple[ModelParams, float]:
    model = Model.JC if rng.random() < 0.5 else Model.AJC
    params = ModelParams(
        model=model,
        alpha=rng.uniform(0.0, 8.0),
        beta=rng.uniform(-200.0, 200.0),
        f=rng.uniform(0.0, 100.0),
    )
    return params, rng.uniform(0.0, 50.0)


def random_bloch(rng: np.random.Generator, r0: float | None = None) -> BlochFourVector:
    """Uniform direction, radius uniform in ``[0, r0]``."""
    r0 = rng.uniform(0.1, 3.0) if r0 is None else r0
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    v *= rng.uniform(0.0, 1.0) * r0
    return BlochFourVector(r0, *v)


def run_oracle_suite(samples: int = 64, seed: int = 0, bloch_tol: float = BLOCH_TOL,
                     eigen_tol: float = EIGEN_TOL,
                     eigen_samples: int = 1000) -> OracleReport:
    """Compare closed-form Bloch series and eigenvalues against the brute-force routes."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    report = OracleReport(samples, bloch_tol, eigen_tol)
    for _ in range(samples):
        params, tau = random_configuration(rng)
        trunc = poisson_weights(params.alpha)[1]
        closed = bloch_series(params, [tau], trunc)[0]
        rho = reduce_to_atom(JointStateTable.from_amplitudes(
            joint_amplitudes(params, tau, trunc)))
        brute = np.array(bloch_from_density(rho).as_tuple())
        dev = float(np.max(np.abs(closed - brute)))
        report.bloch_worst = max(report.bloch_worst, dev)
        if not dev <= bloch_tol:
            report.failures.append(
                f"bloch {params.model.value} alpha={params.alpha:.4f} "
                f"beta={params.beta:.4f} f={params.f:.4f} tau={tau:.4f}: {dev:.3e}"
            )

    for _ in range(eigen_samples):
        R = random_bloch(rng)
        es = eigensystem(R)
        lo, hi = eigen_bruteforce(np.array([
            [0.5 * (R.r0 + R.r3), 0.5 * complex(R.r1, -R.r2)],
            [0.5 * complex(R.r1, R.r2), 0.5 * (R.r0 - R.r3)],
        ]))
        dev = max(abs(lo - es.eps_minus), abs(hi - es.eps_plus))
        report.eigen_worst = max(report.eigen_worst, dev)
        if not dev <= eigen_tol:
            report.failures.append(f"eigen {R.as_tuple()}: {dev:.3e}")
    return report
