"""Exception hierarchy.

Everything raised on purpose by the package derives from ``PQError``. The
three intermediate classes map one-to-one onto CLI exit codes.
"""


class PQError(Exception):
    """Base class for all package errors."""


class ValidationError(PQError, ValueError):
    """Input rejected before any computation (exit code 2)."""


class PQIOError(PQError, OSError):
    """Reading or writing an external file failed (exit code 3)."""


class NumericalError(PQError, ArithmeticError):
    """A quantity is undefined for the given data (exit code 4)."""


class ParameterRangeError(ValidationError):
    def __init__(self, name, value, low=None, high=None, detail=""):
        self.name = name
        self.value = value
        self.low = low
        self.high = high
        bounds = ""
        if low is not None or high is not None:
            bounds = f" (allowed {low} .. {high})"
        msg = f"parameter {name}={value!r} out of range{bounds}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NyquistError(ValidationError):
    pass


class UnsupportedWaveletError(ValidationError):
    pass


class InsufficientLengthError(ValidationError):
    pass


class DimensionError(ValidationError):
    pass


class WeightError(ValidationError):
    pass


class UndefinedRatioError(NumericalError):
    pass


class DetectionError(NumericalError):
    """No transient component could be located in a record."""


class WaveformParseError(PQIOError):
    def __init__(self, path, line, detail):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {detail}")


class NonUniformSamplingError(PQIOError):
    pass
