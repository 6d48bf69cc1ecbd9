class GuardExceeded(ValueError):
    """A brute-force or streaming computation would exceed its configured ceiling."""


class UnsupportedGraph(ValueError):
    """The operation is not defined for this Coxeter graph."""


class CertificationError(RuntimeError):
    """An exact root certificate could not be produced."""

    def __init__(self, message, polynomial=None):
        super().__init__(message)
        self.polynomial = polynomial


class InconclusiveError(CertificationError):
    """Refinement did not separate the intervals within the retry budget."""


class ChainViolation(AssertionError):
    """The surjection inequalities a_k <= b_k <= c_k failed."""
