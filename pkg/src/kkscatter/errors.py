"""Exception types used across the package.

The CLI maps these onto exit statuses: configuration and spec problems
exit with 2, convergence failures with 3, anything else with 1.
"""


class KKScatterError(Exception):
    """Base class for all package errors."""


class DomainError(KKScatterError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ConfigError(KKScatterError):
    """Invalid configuration file, key, value, or CLI request."""


class SpecError(ConfigError):
    """Invalid sweep specification (unknown parameter, observable, or preset)."""


class ConvergenceError(KKScatterError):
    """Discretization refinement hit its cap without meeting tolerance.

    Carries the last two iterates so callers can inspect how far apart
    they were.
    """

    def __init__(self, message, last=None, previous=None):
        super().__init__(message)
        self.last = last
        self.previous = previous


class DegenerateLayerError(KKScatterError):
    """Longitudinal index magnitude below the degeneracy guard."""


class SingularMatrixError(KKScatterError):
    """Total transfer matrix has |M22| below the underflow guard."""


class UndefinedContrastError(KKScatterError):
    """Contrast requested with both output channels exactly dark."""


class DegenerateDenominatorError(KKScatterError):
    """KK figure-of-merit denominator below the underflow guard."""
