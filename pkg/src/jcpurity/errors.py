"""Exception hierarchy shared by all jcpurity modules."""


class JCPurityError(Exception):
    """Base class for every error raised by this package."""


class InvalidBloch(JCPurityError, ValueError):
    """Bloch four-vector outside the physical cone |r| <= r0, or r0 <= 0."""


class NotHermitian(JCPurityError, ValueError):
    pass


class NegativeEigenvalue(JCPurityError, ValueError):
    pass


class ComplexRoots(JCPurityError, ArithmeticError):
    """Characteristic polynomial of a supposedly Hermitian matrix has complex roots."""


class OutOfRange(JCPurityError, ValueError):
    pass


class NonConvergent(JCPurityError, RuntimeError):
    """Poisson tail could not be pushed below the bound within the Fock cap."""


class TruncationError(JCPurityError, RuntimeError):
    """Truncated series lost more norm than the tail bound allows.

    The offending scaled time is kept in :attr:`tau` when known.
    """

    def __init__(self, message, tau=None):
        super().__init__(message)
        self.tau = tau


class EmptySeries(JCPurityError, ValueError):
    """Requested plot series is unknown or has nothing to draw."""
