"""Exception types shared across the package."""


class IdampError(ValueError):
    """Base class for all contract violations raised by this package."""


class AmplitudeError(IdampError):
    """Amplitude outside the unit disk, non-finite, or a probability contract break."""


class MatrixShapeError(IdampError):
    """Matrix is not square, empty, or does not match its index sets."""


class MatrixSizeError(IdampError):
    """Matrix (or enumeration domain) exceeds the supported size cap."""


class ExchangeClassError(IdampError):
    """An exchange class was used where it has no defined amplitude."""


class SequenceError(IdampError):
    """Malformed measurement sequence: label, particle-count, or junction mismatch."""


class NormalizationError(IdampError):
    """A probability distribution failed its normalization check."""


class ExperimentFormatError(IdampError):
    """Experiment document failed to parse or validate."""
