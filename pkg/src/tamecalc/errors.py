"""Exception hierarchy shared by every module."""


class TameCalcError(Exception):
    """Base class for all errors raised by :mod:`tamecalc`."""


class DivisionByZero(TameCalcError, ZeroDivisionError):
    pass


class PresentationMismatch(TameCalcError, ValueError):
    """Two operands live in different algebra presentations."""


class UnsupportedBackend(TameCalcError, ValueError):
    pass


class MetricError(TameCalcError, ValueError):
    """Base class for invalid metric data; ``entries`` names the offenders."""

    def __init__(self, message, entries=()):
        super().__init__(message)
        self.entries = tuple(entries)


class NotSymmetric(MetricError):
    pass


class NotStronglySigmaCompatible(MetricError):
    pass


class NotInvertible(MetricError):
    pass


class DerivationClosureViolated(TameCalcError, ValueError):
    pass


class WrongRank(TameCalcError, ValueError):
    pass


class PositivityNotCertified(TameCalcError, ValueError):
    pass


class NotARelation(TameCalcError, ValueError):
    pass


class ParseError(TameCalcError, ValueError):
    def __init__(self, message, position=None, source=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
        self.source = source


class UnknownGenerator(ParseError):
    pass


class ConfigError(TameCalcError, ValueError):
    pass
