"""Base pipeline class for instance verification"""

import logging
from abc import ABC, abstractmethod

import numpy as np

from qbench.core.config import VerificationConfig
from qbench.core.context import VerificationContext
from qbench.core.exceptions import PipelineError, QBenchError, StageError
from qbench.problems.instance import Instance

logger = logging.getLogger(__name__)

# errors a malformed instance can provoke inside a check; they fail the check, not the run
REPORTED_ERRORS = (QBenchError, ValueError, ZeroDivisionError, np.linalg.LinAlgError)


class BasePipeline(ABC):
    """Pipeline base class for verification workflows"""

    level: str = "quick"

    def __init__(self, config: VerificationConfig | None = None):
        self.config = config or VerificationConfig()
        self.stages = self._build_stages()

    @abstractmethod
    def _build_stages(self) -> list:
        """Build the list of stages for this pipeline"""
        pass

    async def run(self, instance: Instance) -> VerificationContext:
        """Execute the pipeline and return final context"""
        context = VerificationContext(instance=instance, level=self.level, config=self.config)

        try:
            for stage in self.stages:
                try:
                    context = await stage.execute(context)
                except REPORTED_ERRORS as e:
                    error = StageError(f"{stage.name} stage failed: {e}")
                    logger.warning("%s", error)
                    context.add(f"{stage.name} stage", False, detail=str(error))
        except Exception as e:
            raise PipelineError(f"Pipeline execution failed: {e}") from e

        return context
