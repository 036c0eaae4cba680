"""Base stage class for instance verification"""

from abc import ABC, abstractmethod

import numpy as np

from qbench.core.config import VerificationConfig
from qbench.core.context import VerificationContext
from qbench.rng import fnv1a_32


class BaseStage(ABC):
    """Base class for verification stages"""

    name: str = ""

    def __init__(self, config: VerificationConfig | None = None):
        self.config = config or VerificationConfig()

    def _rng(self, context: VerificationContext) -> np.random.Generator:
        # one stream per stage and instance, independent of stage order
        inst = context.instance
        return np.random.default_rng([self.config.seed, inst.index, inst.dimension, fnv1a_32(self.name)])

    @abstractmethod
    async def execute(self, context: VerificationContext) -> VerificationContext:
        """Execute this stage and return updated context"""
        pass
