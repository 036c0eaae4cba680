"""Core module - configuration, verification context, exceptions"""

from qbench.core.config import Config, ExperimentSpec, SolverConfig
from qbench.core.context import CheckResult, VerificationContext
from qbench.core.exceptions import QBenchError

__all__ = [
    "Config",
    "ExperimentSpec",
    "SolverConfig",
    "CheckResult",
    "VerificationContext",
    "QBenchError",
]
