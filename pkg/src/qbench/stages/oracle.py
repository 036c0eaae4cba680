"""Oracle stage - evaluated Pareto set images against the analytic front"""

import numpy as np

from qbench.analytic.front import FrontParam, pareto_set_point
from qbench.core.context import VerificationContext
from qbench.stages.base import BaseStage

ORACLE_TOLERANCE = 1e-10


class OracleStage(BaseStage):
    """evaluate(pareto_set_point(t)) must equal front_point(t)"""

    name = "oracle"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        inst = context.instance
        param = FrontParam.from_instance(inst)
        rng = self._rng(context)
        ts = np.concatenate(([0.0, 0.5, 1.0], rng.random(self.config.random_points)))

        points = np.array([pareto_set_point(inst, t) for t in ts])
        evaluated = inst.evaluate_many(points)
        expected = param.points(ts)
        scale = np.abs(expected) + param.span
        worst = float(np.max(np.abs(evaluated - expected) / scale))
        context.add("oracle consistency", worst <= ORACLE_TOLERANCE, worst)
        return context
