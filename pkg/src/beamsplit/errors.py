"""Exception types shared across the package."""


class BeamsplitError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BeamsplitError, ValueError):
    """A parameter lies outside the domain where the model is defined."""


class UndefinedPhaseError(BeamsplitError, ArithmeticError):
    """A relative phase was requested between amplitudes where one vanishes."""


class NoSolutionError(BeamsplitError, ValueError):
    """No intensity-balanced internal phase exists for the given interface."""


class NormalizationError(BeamsplitError, ValueError):
    """An input amplitude pair does not carry unit total intensity."""
