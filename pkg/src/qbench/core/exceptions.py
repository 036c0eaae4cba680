"""Custom exceptions"""


class QBenchError(Exception):
    """Base exception of the benchmark package"""

    pass


class ValidationError(QBenchError, ValueError):
    """Invalid argument, class name, file content or experiment spec"""

    pass


class ConfigurationError(QBenchError):
    """Configuration or spec file could not be read"""

    pass


class DegeneracyError(QBenchError):
    """Random matrix was numerically rank deficient; the caller redraws"""

    pass


class NotPositiveDefiniteError(QBenchError):
    """Cholesky factorization hit a non-positive pivot"""

    pass


class NumericError(QBenchError):
    """Numerical routine failed to converge"""

    pass


class DomainError(QBenchError, ValueError):
    """Quantity requested at a point where it does not exist"""

    pass


class PipelineError(QBenchError):
    """Pipeline execution error"""

    pass


class StageError(QBenchError):
    """Stage execution error"""

    pass
