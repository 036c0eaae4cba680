"""Weight stage - weighted-sum minimizers lie on the Pareto segment"""

import numpy as np

from qbench.analytic.front import (
    distance_to_pareto_set,
    pareto_set_point,
    t_from_weight,
    weight_from_t,
    weight_to_point,
)
from qbench.core.context import VerificationContext
from qbench.stages.base import BaseStage

SEGMENT_TOLERANCE = 1e-9
ROUND_TRIP_TOLERANCE = 1e-12


class WeightStage(BaseStage):
    """Check the weight-to-point map against the segment and the t parametrization"""

    name = "weights"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        inst = context.instance
        rng = self._rng(context)
        weights = np.concatenate(([0.0, 0.5, 1.0], rng.random(self.config.random_points)))
        delta_norm = float(np.linalg.norm(inst.delta))

        distance = 0.0
        mismatch = 0.0
        for c in weights:
            x = weight_to_point(inst, c)
            distance = max(distance, distance_to_pareto_set(inst, x))
            mismatch = max(mismatch, float(np.linalg.norm(x - pareto_set_point(inst, t_from_weight(inst, c)))))
        context.add("weighted minimizer on segment", distance <= SEGMENT_TOLERANCE * delta_norm, distance)
        context.add("weighted minimizer at t(c)", mismatch <= SEGMENT_TOLERANCE * delta_norm, mismatch)

        grid = np.linspace(0.0, 1.0, 1001)
        round_trip = max(abs(t_from_weight(inst, weight_from_t(inst, t)) - t) for t in grid)
        context.add("weight/t round trip", round_trip <= ROUND_TRIP_TOLERANCE, round_trip)
        return context
