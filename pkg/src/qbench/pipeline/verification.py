"""Verification pipelines - quick and full instance checks"""

from typing import Literal

from qbench.core.config import SpectrumKind, VerificationConfig
from qbench.core.context import VerificationContext
from qbench.core.exceptions import ValidationError
from qbench.pipeline.base import BasePipeline
from qbench.problems.classes import DEFAULT_KAPPA, ProblemClass
from qbench.problems.generator import sample_instance
from qbench.problems.instance import Instance
from qbench.stages.gradient import GradientStage
from qbench.stages.grid_front import GridFrontStage
from qbench.stages.invariants import InvariantStage
from qbench.stages.oracle import OracleStage
from qbench.stages.shape import ShapeStage
from qbench.stages.weights import WeightStage

VerificationLevel = Literal["quick", "full"]


class QuickVerificationPipeline(BasePipeline):
    """Invariant report plus analytic consistency checks"""

    level = "quick"

    def _build_stages(self) -> list:
        return [
            InvariantStage(self.config),
            OracleStage(self.config),
            WeightStage(self.config),
            GradientStage(self.config),
            ShapeStage(self.config),
        ]


class FullVerificationPipeline(QuickVerificationPipeline):
    """Quick checks plus the brute-force grid front check in two dimensions"""

    level = "full"

    def _build_stages(self) -> list:
        return [*super()._build_stages(), GridFrontStage(self.config)]


def create_pipeline(level: VerificationLevel, config: VerificationConfig | None = None) -> BasePipeline:
    if level == "quick":
        return QuickVerificationPipeline(config)
    elif level == "full":
        return FullVerificationPipeline(config)
    else:
        raise ValidationError(f"Unknown verification level: {level}")


async def verify_loaded(
    instance: Instance, level: VerificationLevel = "quick", config: VerificationConfig | None = None
) -> VerificationContext:
    """Verify an instance that was built or loaded elsewhere"""
    return await create_pipeline(level, config).run(instance)


async def verify_instance(
    class_name: str,
    dimension: int,
    index: int,
    level: VerificationLevel = "quick",
    kappa: float = DEFAULT_KAPPA,
    spectrum: SpectrumKind = "ellipsoid",
    config: VerificationConfig | None = None,
) -> VerificationContext:
    """Generate an instance and run the checks of ``level`` on it.

    Raises:
        ValidationError: malformed class name or incompatible dimension
    """
    problem_class = ProblemClass.from_name(class_name, dimension, kappa, spectrum)
    return await verify_loaded(sample_instance(problem_class, index), level, config)
