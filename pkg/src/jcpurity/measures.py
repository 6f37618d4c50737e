"""Scalar purity and entanglement quantifiers of a qubit reduced state.

Every quantity is a function of the Bloch four-vector alone.  For a
normalized state (``r0 = 1``) the degree of purity ``tan_phi = |r|`` and the
concurrence ``C = sqrt(1 - |r|**2)`` obey ``tan_phi**2 + C**2 = 1``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .core import BlochFourVector
from .errors import NegativeEigenvalue, OutOfRange

__all__ = [
    "PurityReport",
    "binary_entropy_of_formation",
    "concurrence",
    "covariant_concurrence_sq",
    "degree_of_purity",
    "mixed_state_measure",
    "purity_measure",
    "purity_report",
    "von_neumann_entropy",
]

NEG_TOL = 1e-12


def mixed_state_measure(R: BlochFourVector) -> float:
    """``M = (r0**2 - |r|**2) / 4``, the determinant of ``rho``."""
    r = R.norm
    return 0.25 * (R.r0 - r) * (R.r0 + r)


def purity_measure(R: BlochFourVector) -> float:
    """``Tr(rho**2) = r0**2 - 2M``."""
    return R.r0 * R.r0 - 2.0 * mixed_state_measure(R)


def concurrence(R: BlochFourVector) -> float:
    """``C = 2 sqrt(M)``; zero for a pure reduced state."""
    return 2.0 * math.sqrt(mixed_state_measure(R))


def covariant_concurrence_sq(R: BlochFourVector) -> float:
    """Minkowski square ``R_mu R^mu = r0**2 - r1**2 - r2**2 - r3**2``."""
    return R.r0 * R.r0 - R.r1 * R.r1 - R.r2 * R.r2 - R.r3 * R.r3


def degree_of_purity(R: BlochFourVector) -> tuple[float, float]:
    """Return ``(tan_phi, phi)`` with ``tan_phi = |r| / r0`` and ``phi`` in ``[0, pi/4]``."""
    tan_phi = min(R.norm / R.r0, 1.0)
    return tan_phi, math.atan(tan_phi)


def _xlog2x(p: float) -> float:
    return p * math.log2(p) if p > 0.0 else 0.0


def von_neumann_entropy(eps_minus: float, eps_plus: float) -> float:
    """Base-2 entropy ``-sum eps log2 eps`` over the two eigenvalues of ``rho``.

    Eigenvalues within ``1e-12`` below zero are treated as zero.
    """
    for eps in (eps_minus, eps_plus):
        if eps < -NEG_TOL:
            raise NegativeEigenvalue(f"eigenvalue {eps!r} is negative")
    s = -_xlog2x(max(eps_minus, 0.0)) - _xlog2x(max(eps_plus, 0.0))
    return s + 0.0  # turn -0.0 into 0.0


def binary_entropy_of_formation(tan_phi: float) -> float:
    """Binary entropy of ``(1 +- tan_phi) / 2``."""
    if not (-NEG_TOL <= tan_phi <= 1.0 + NEG_TOL):
        raise OutOfRange(f"tan_phi must lie in [0, 1], got {tan_phi!r}")
    t = min(max(tan_phi, 0.0), 1.0)
    return -_xlog2x(0.5 * (1.0 + t)) - _xlog2x(0.5 * (1.0 - t)) + 0.0


@dataclass(frozen=True)
class PurityReport:
    """All purity/entanglement quantifiers of one Bloch four-vector.

    ``lambda_minus`` doubles as the atomic nonclassicality quantifier and
    ``amp_mag * exp(i * amp_phase)`` is the polar form of the state purity
    complex amplitude ``(r0 + i|r|) / sqrt(2)``.
    """

    mixed_measure: float
    purity: float
    concurrence: float
    tangle: float
    tan_phi: float
    phi: float
    lambda_minus: float
    lambda_plus: float
    eps_minus: float
    eps_plus: float
    amp_mag: float
    amp_phase: float
    entropy_vn: float
    entropy_binary: float
    excitation: float

    @property
    def nonclassicality(self) -> float:
        return self.lambda_minus

    def as_dict(self) -> dict:
        return asdict(self)


def purity_report(R: BlochFourVector) -> PurityReport:
    r0 = R.r0
    r = R.norm
    m = mixed_state_measure(R)
    c = 2.0 * math.sqrt(m)
    tan_phi, phi = degree_of_purity(R)
    eps_minus, eps_plus = 0.5 * (r0 - r), 0.5 * (r0 + r)
    return PurityReport(
        mixed_measure=m,
        purity=r0 * r0 - 2.0 * m,
        concurrence=c,
        tangle=4.0 * m,
        tan_phi=tan_phi,
        phi=phi,
        lambda_minus=0.5 * (r0 - c),
        lambda_plus=0.5 * (r0 + c),
        eps_minus=eps_minus,
        eps_plus=eps_plus,
        amp_mag=math.sqrt(0.5 * (r0 * r0 + r * r)),
        amp_phase=math.atan2(r, r0),
        entropy_vn=von_neumann_entropy(eps_minus, eps_plus),
        entropy_binary=binary_entropy_of_formation(tan_phi),
        excitation=0.5 * (1.0 + R.r3),
    )
