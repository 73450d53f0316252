class FracGMError(Exception):
    """
    Base class of every error raised by the frac_gauss_markov library.
    The Controller catches this type and maps subclasses to CLI exit codes.
    """
    pass


class ParameterError(FracGMError, ValueError):
    pass


class DomainError(FracGMError, ValueError):
    pass


class GridError(FracGMError, ValueError):
    pass


class NumericError(FracGMError, ArithmeticError):
    pass


class NotPositiveDefiniteError(NumericError):
    pass


class UnsupportedSpecError(FracGMError):
    pass


class ResolutionError(FracGMError):
    pass


class ValidationFailure(FracGMError):
    pass


class LowOrderAccuracyWarning(UserWarning):
    pass
