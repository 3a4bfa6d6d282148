"""Exception hierarchy shared by every analysis module."""


class GenCorrError(Exception):
    """Base class for all errors raised by gencorr."""


class InvalidInputError(GenCorrError, ValueError):
    """Malformed matrix, state, subset or parameter."""


class NotAProductError(GenCorrError):
    """A factorization was requested across a cut whose rank is not 1."""


class InvalidFactorizationError(GenCorrError, ValueError):
    """Grid shape a x b does not match the spectral rank."""


class CapacityError(GenCorrError):
    """Problem exceeds a configured size limit (qubits, rank, purification width)."""

    def __init__(self, message: str, limit: str = ""):
        super().__init__(message)
        self.limit = limit


class CrossValidationError(GenCorrError):
    """Two independent decision routes disagreed."""

    def __init__(self, message: str, theorem3_witness=None, oracle_witness=None):
        super().__init__(message)
        self.theorem3_witness = theorem3_witness
        self.oracle_witness = oracle_witness
