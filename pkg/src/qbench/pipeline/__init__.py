"""Pipeline module for verification and experiments"""

from .base import BasePipeline
from .experiment import ExperimentPipeline, ExperimentResult, run_seed
from .verification import (
    FullVerificationPipeline,
    QuickVerificationPipeline,
    create_pipeline,
    verify_instance,
    verify_loaded,
)

__all__ = [
    "BasePipeline",
    "ExperimentPipeline",
    "ExperimentResult",
    "FullVerificationPipeline",
    "QuickVerificationPipeline",
    "create_pipeline",
    "run_seed",
    "verify_instance",
    "verify_loaded",
]
