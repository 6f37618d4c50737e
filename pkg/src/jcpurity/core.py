"""Bloch four-vector algebra of a single (possibly un-normalized) qubit.

A reduced atomic state is written as ``rho = (r0*I + r1*s1 + r2*s2 + r3*s3) / 2``
with the basis ordered ``(e, g)``: row/column 0 is the excited level and
``s3 = |e><e| - |g><g|``.  Density matrices are plain ``(2, 2)`` complex
numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidBloch, NotHermitian

__all__ = [
    "BLOCH_TOL",
    "BlochFourVector",
    "EigenSystem",
    "PAULI",
    "bloch_from_density",
    "density_from_bloch",
    "eigensystem",
    "purity_decomposition",
]

#: relative slack on |r| <= r0 absorbed by rescaling instead of raising
BLOCH_TOL = 1e-9

HERMITIAN_TOL = 1e-9
RESIDUAL_TOL = 1e-10

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

E_KET = np.array([1.0, 0.0], dtype=complex)
G_KET = np.array([0.0, 1.0], dtype=complex)


@dataclass(frozen=True)
class BlochFourVector:
    """The four real numbers ``(r0, r1, r2, r3)`` parameterizing a qubit state.

    ``r0`` is the trace and ``r1..r3`` are the Pauli expectation values.
    Vectors that poke outside the cone by less than ``BLOCH_TOL * r0``
    (round-off from truncated sums) are rescaled onto its surface;
    anything further out raises :class:`InvalidBloch`.
    """

    r0: float
    r1: float
    r2: float
    r3: float

    def __post_init__(self):
        vals = tuple(float(v) for v in (self.r0, self.r1, self.r2, self.r3))
        if not all(math.isfinite(v) for v in vals):
            raise InvalidBloch(f"non-finite Bloch component in {vals}")
        r0, r1, r2, r3 = vals
        if r0 <= 0.0:
            raise InvalidBloch(f"r0 must be positive, got {r0!r}")
        norm = math.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
        if norm > r0:
            if norm > r0 * (1.0 + BLOCH_TOL):
                raise InvalidBloch(f"|r| = {norm!r} exceeds r0 = {r0!r}")
            scale = r0 / norm
            r1, r2, r3 = r1 * scale, r2 * scale, r3 * scale
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "r2", r2)
        object.__setattr__(self, "r3", r3)

    @property
    def norm(self) -> float:
        """Length |r| of the three-vector part."""
        return math.sqrt(self.r1 * self.r1 + self.r2 * self.r2 + self.r3 * self.r3)

    @property
    def transverse(self) -> float:
        return math.hypot(self.r1, self.r2)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.r0, self.r1, self.r2, self.r3)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class EigenSystem:
    """Spectral data of ``rho``; eigenvectors are ``(e, g)``-ordered unit vectors."""

    eps_minus: float
    eps_plus: float
    psi_minus: np.ndarray
    psi_plus: np.ndarray
    theta: float
    phi_az: float


def density_from_bloch(R: BlochFourVector) -> np.ndarray:
    """Return the 2x2 density matrix ``rho`` for a Bloch four-vector.

    >>> density_from_bloch(BlochFourVector(1, 0, 0, -1)).real
    array([[0., 0.],
           [0., 1.]])
    """
    r0, r1, r2, r3 = R.as_tuple()
    return 0.5 * np.array(
        [[r0 + r3, r1 - 1j * r2], [r1 + 1j * r2, r0 - r3]], dtype=complex
    )


def bloch_from_density(rho) -> BlochFourVector:
    """Recover ``r_j = Tr(sigma_j rho)`` from a Hermitian 2x2 matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {rho.shape}")
    dev = np.max(np.abs(rho - rho.conj().T))
    if dev > HERMITIAN_TOL:
        raise NotHermitian(f"rho deviates from its adjoint by {dev:.3e}")
    # reading entries directly is exact where Tr(sigma_j rho) would add round-off
    r0 = (rho[0, 0] + rho[1, 1]).real
    r3 = (rho[0, 0] - rho[1, 1]).real
    r1 = (rho[0, 1] + rho[1, 0]).real
    r2 = (1j * (rho[0, 1] - rho[1, 0])).real
    return BlochFourVector(r0, r1, r2, r3)


def purity_decomposition(R: BlochFourVector) -> tuple[float, float]:
    """Split ``rho**2 = coef * rho - mixed * I``; returns ``(coef, mixed)``.

    ``coef`` is the trace ``r0`` and ``mixed = (r0**2 - |r|**2) / 4`` is the
    weight of the completely mixed part, i.e. ``det(rho)``.
    """
    r = R.norm
    return R.r0, 0.25 * (R.r0 - r) * (R.r0 + r)


def _angles(R: BlochFourVector) -> tuple[float, float]:
    perp = R.transverse
    theta = math.atan2(perp, R.r3)
    phi_az = math.atan2(R.r2, R.r1) if perp > 0.0 else 0.0
    return theta, phi_az


def eigensystem(R: BlochFourVector) -> EigenSystem:
    """Eigenvalues and eigenvectors of ``rho`` from the Bloch angles.

    The eigenvectors come from combining ``|g>`` with its image under
    ``r . sigma``:  ``psi_pm = |g> pm (-cos(theta)|g> + sin(theta) e^{-i phi}|e>)``,
    evaluated with half-angle identities so the normalization does not
    cancel catastrophically near the poles.  On the axis (``r1 = r2 = 0``)
    and at the origin the combination degenerates and the computational
    basis is returned instead.  Every eigenpair is checked against ``rho``.
    """
    r = R.norm
    eps_minus = 0.5 * (R.r0 - r)
    eps_plus = 0.5 * (R.r0 + r)
    theta, phi_az = _angles(R)

    if r == 0.0 or R.transverse == 0.0:
        if R.r3 > 0.0:
            psi_plus, psi_minus = E_KET.copy(), G_KET.copy()
        else:
            psi_plus, psi_minus = G_KET.copy(), E_KET.copy()
    else:
        half_s, half_c = math.sin(0.5 * theta), math.cos(0.5 * theta)
        phase = complex(math.cos(phi_az), -math.sin(phi_az))
        # (1 - cos t, sin t) = 2 sin(t/2) (sin(t/2), cos(t/2)); (e, g) ordering
        psi_plus = np.array([half_c * phase, half_s], dtype=complex)
        psi_minus = np.array([-half_s * phase, half_c], dtype=complex)
        psi_plus /= np.linalg.norm(psi_plus)
        psi_minus /= np.linalg.norm(psi_minus)

    rho = density_from_bloch(R)
    for eps, psi in ((eps_minus, psi_minus), (eps_plus, psi_plus)):
        resid = np.linalg.norm(rho @ psi - eps * psi)
        if resid > RESIDUAL_TOL * max(1.0, R.r0):
            raise ArithmeticError(
                f"eigenvector residual {resid:.3e} for eigenvalue {eps!r} of {R}"
            )
    return EigenSystem(eps_minus, eps_plus, psi_minus, psi_plus, theta, phi_az)
