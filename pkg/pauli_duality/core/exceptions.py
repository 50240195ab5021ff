"""Error hierarchy shared by the library and the command-line driver."""


class PauliDualityError(Exception):
    """Base error.

    ``exit_code`` is the process exit status the CLI returns when the error
    escapes a command.
    """

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DimensionError(PauliDualityError, ValueError):
    """Operands act on different numbers of sites."""


class SizeLimitError(PauliDualityError):
    """Requested system size exceeds the dense backend limit."""

    exit_code = 3


class SingularityError(PauliDualityError, ValueError):
    """A local operator (or the lambda parameter) is not invertible."""


class DegenerateParameterError(PauliDualityError, ValueError):
    """Parameter point where a closed-form construction is undefined."""


class ModelError(PauliDualityError, ValueError):
    """Invalid model family, size or coupling."""

    exit_code = 2


class NoDualError(PauliDualityError):
    """The model family has no stated dual."""

    exit_code = 2


class NonHermitianError(PauliDualityError, ValueError):
    """A Hermitian operator was required."""


class ConvergenceError(PauliDualityError):
    """Iterative eigen-solver did not reach the residual bound."""


class FixedPointError(PauliDualityError):
    """Joint +1 eigenspace of a generator set is empty or not one-dimensional."""


class UnnormalizedStateError(PauliDualityError, ValueError):
    """A normalized state vector was required."""


class ParseError(PauliDualityError, ValueError):
    """Malformed text representation."""

    exit_code = 2
