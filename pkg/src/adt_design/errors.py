"""Semantic exception hierarchy for the package.

Every failure raised by this package derives from :class:`AdtDesignError`, so
callers can distinguish "this library rejected something" from generic Python
errors.  Domain violations (bad arguments) and numerical breakdowns (failed
iterations, degenerate probabilities) are kept separate because the former are
caller bugs and the latter are properties of the problem instance.
"""


class AdtDesignError(Exception):
    """Base class for all package errors."""


class DomainError(AdtDesignError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NumericalError(AdtDesignError, ArithmeticError):
    """An iteration or series failed to converge, or produced non-finite values."""


class DegenerateCellError(NumericalError):
    """A binary-outcome cell probability vanished; 1/P weighting is undefined."""


class InfeasibleDesignError(AdtDesignError):
    """No design on the candidate set yields an estimable criterion value."""


class ConfigError(AdtDesignError, ValueError):
    """A scenario configuration file failed schema or cross-field validation."""
