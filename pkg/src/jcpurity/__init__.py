"""Atomic state purity, concurrence and Bloch four-vector dynamics in the JC and anti-JC models."""

from ._backend import BACKEND
from .core import (
    BlochFourVector,
    EigenSystem,
    bloch_from_density,
    density_from_bloch,
    eigensystem,
    purity_decomposition,
)
from .dynamics import (
    FockTruncation,
    Model,
    ModelParams,
    ajc_coefficients,
    bloch_ajc,
    bloch_jc,
    bloch_series,
    evaluate,
    jc_coefficients,
    joint_amplitudes,
    poisson_weights,
)
from .errors import (
    ComplexRoots,
    EmptySeries,
    InvalidBloch,
    JCPurityError,
    NegativeEigenvalue,
    NonConvergent,
    NotHermitian,
    OutOfRange,
    TruncationError,
)
from .measures import (
    PurityReport,
    binary_entropy_of_formation,
    concurrence,
    covariant_concurrence_sq,
    degree_of_purity,
    mixed_state_measure,
    purity_measure,
    purity_report,
    von_neumann_entropy,
)
from .oracle import JointStateTable, eigen_bruteforce, reduce_to_atom, run_oracle_suite
from .scan import ScanRecord, TimeGrid, run_scan, run_sweep

__version__ = "0.1.0"
