"""Exception types raised by the public API."""


class BifsnnError(Exception):
    """Base class for all library-specific errors."""


class NonPositiveTime(BifsnnError, ValueError):
    """A duration or step size was zero or negative."""


class MisalignedGrid(BifsnnError, ValueError):
    """Duration is not an integer multiple of the step size."""


class IndexOutOfRange(BifsnnError, IndexError):
    """A neuron or sample index is outside the valid range."""


class RateTooHigh(BifsnnError, ValueError):
    """Encoding rate exceeds one expected spike per time bin."""


class TargetOverflow(BifsnnError, ValueError):
    """A target spike count exceeds the number of grid steps."""


class NonPositiveThreshold(BifsnnError, ValueError):
    """The firing threshold must be strictly positive."""


class UnstableStep(BifsnnError, ValueError):
    """The integration step exceeds the membrane time constant."""


class DimensionMismatch(BifsnnError, ValueError):
    """Array shapes do not chain or do not match the declared sizes."""


class GridMismatch(BifsnnError, ValueError):
    """Two time-gridded objects live on different grids."""


class NonSquare(BifsnnError, ValueError):
    """A matrix operation requires a square matrix."""


class NoConvergence(BifsnnError, ArithmeticError):
    """An iterative solver exhausted its budget without converging."""


class NonPositiveTau(BifsnnError, ValueError):
    """A membrane time constant of zero makes the rate undefined."""


class RecordMismatch(BifsnnError, ValueError):
    """A forward record does not belong to the given network."""


class ShapeMismatch(BifsnnError, ValueError):
    """Gradient shapes do not match the network parameters."""


class EmptyDataset(BifsnnError, ValueError):
    """A training or evaluation set contains no samples."""


class BadMagic(BifsnnError, ValueError):
    """An IDX file does not start with the expected magic number."""


class TruncatedFile(BifsnnError, ValueError):
    """An IDX file ended before its declared payload."""


class DimensionOverflow(BifsnnError, ValueError):
    """IDX header dimensions are implausibly large."""


class CountMismatch(BifsnnError, ValueError):
    """Paired image and label files declare different counts."""


class ConfigInvalid(BifsnnError, ValueError):
    """An experiment configuration failed validation."""
