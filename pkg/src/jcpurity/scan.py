"""Time-grid scans and one-parameter sweeps of the closed-form dynamics."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .core import BlochFourVector
from .dynamics import FockTruncation, ModelParams, bloch_series, poisson_weights
from .measures import PurityReport, purity_report

__all__ = [
    "FIELDS",
    "ScanRecord",
    "TimeGrid",
    "run_scan",
    "run_sweep",
    "series",
]

SWEEPABLE = ("alpha", "beta", "f")

#: flat column order shared by CSV/JSON output and plot series names
FIELDS = (
    "tau", "r0", "r1", "r2", "r3", "r_norm", "mixed_measure", "purity",
    "concurrence", "tangle", "tan_phi", "phi", "eps_minus", "eps_plus",
    "lambda_minus", "lambda_plus", "entropy_vn", "entropy_binary", "excitation",
)


@dataclass(frozen=True)
class TimeGrid:
    """Inclusive grid ``tau_i = i * tau_max / steps`` for ``i = 0..steps``."""

    tau_max: float = 50.0
    steps: int = 5000

    def __post_init__(self):
        if not (math.isfinite(self.tau_max) and self.tau_max > 0.0):
            raise ValueError(f"tau_max must be positive, got {self.tau_max!r}")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError(f"steps must be a positive integer, got {self.steps!r}")
        object.__setattr__(self, "steps", int(self.steps))

    def points(self) -> np.ndarray:
        return np.arange(self.steps + 1) * (self.tau_max / self.steps)


@dataclass(frozen=True)
class ScanRecord:
    tau: float
    bloch: BlochFourVector
    report: PurityReport

    def row(self) -> dict:
        """Flat mapping keyed by :data:`FIELDS`."""
        b, rep = self.bloch, self.report
        out = {"tau": self.tau, "r0": b.r0, "r1": b.r1, "r2": b.r2, "r3": b.r3,
               "r_norm": b.norm}
        for name in FIELDS[6:]:
            out[name] = getattr(rep, name)
        return out


def run_scan(params: ModelParams, grid: TimeGrid,
             trunc: FockTruncation | None = None,
             num_threads: int = 1) -> list[ScanRecord]:
    """Evaluate the model on every grid point, in ascending ``tau``.

    Raises :class:`~jcpurity.errors.TruncationError` carrying the first
    time at which the truncated series loses too much norm.
    """
    if trunc is None:
        trunc = poisson_weights(params.alpha)[1]
    taus = grid.points()
    comps = bloch_series(params, taus, trunc, num_threads=num_threads)
    records = []
    for tau, r in zip(taus.tolist(), comps.tolist()):
        bloch = BlochFourVector(*r)
        records.append(ScanRecord(tau, bloch, purity_report(bloch)))
    return records


def run_sweep(base: ModelParams, param_name: str, values, grid: TimeGrid,
              trunc: FockTruncation | None = None,
              num_threads: int = 1) -> dict[float, list[ScanRecord]]:
    """One independent scan per value of ``alpha``, ``beta`` or ``f``.

    The Fock truncation is reused across values unless ``alpha`` is the
    swept parameter, in which case each value gets its own.
    """
    if param_name not in SWEEPABLE:
        raise ValueError(f"cannot sweep {param_name!r}; choose from {SWEEPABLE}")
    values = [float(v) for v in values]
    if not values:
        raise ValueError("sweep needs at least one value")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("sweep values must be finite")
    if trunc is None and param_name != "alpha":
        trunc = poisson_weights(base.alpha)[1]
    results = {}
    for v in values:
        params = dataclasses.replace(base, **{param_name: v})
        t = None if param_name == "alpha" else trunc
        results[v] = run_scan(params, grid, t, num_threads=num_threads)
    return results


def series(records, name: str) -> np.ndarray:
    """Column ``name`` of a record list as an array."""
    if name not in FIELDS:
        raise KeyError(name)
    return np.array([rec.row()[name] for rec in records])
