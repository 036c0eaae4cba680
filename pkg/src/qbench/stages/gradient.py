"""Gradient stage - cancellation on the Pareto set and finite differences"""

import numpy as np

from qbench.analytic.front import pareto_set_point
from qbench.core.context import VerificationContext
from qbench.problems.instance import Instance
from qbench.stages.base import BaseStage

CANCELLATION_TOLERANCE = 1e-7
FINITE_DIFFERENCE_TOLERANCE = 1e-5


def cancellation_weight(g1: np.ndarray, g2: np.ndarray) -> tuple[float, float]:
    """Least-squares c minimizing ||c g1 + (1 - c) g2|| and the relative residual"""
    diff = g1 - g2
    c = float(-np.dot(g2, diff) / np.dot(diff, diff))
    residual = float(np.linalg.norm(c * g1 + (1.0 - c) * g2))
    return c, residual / float(np.linalg.norm(g1) + np.linalg.norm(g2))


def finite_difference_gradient(inst: Instance, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Central differences with h = 1e-6 (1 + ||x||)"""
    h = 1e-6 * (1.0 + float(np.linalg.norm(x)))
    shifts = h * np.eye(inst.dimension)
    forward = inst.evaluate_many(x + shifts)
    backward = inst.evaluate_many(x - shifts)
    grad = (forward - backward) / (2.0 * h)
    return grad[:, 0], grad[:, 1]


class GradientStage(BaseStage):
    """Gradients cancel with a weight in (0, 1) on the segment and match central differences"""

    name = "gradient"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        inst = context.instance
        rng = self._rng(context)

        worst_residual = 0.0
        weights_inside = True
        for t in (np.arange(self.config.segment_points) + 0.5) / self.config.segment_points:
            g1, g2 = inst.gradient(pareto_set_point(inst, t))
            c, residual = cancellation_weight(g1, g2)
            weights_inside &= 0.0 < c < 1.0
            worst_residual = max(worst_residual, residual)
        context.add(
            "gradient cancellation",
            weights_inside and worst_residual <= CANCELLATION_TOLERANCE,
            worst_residual,
        )

        worst_fd = 0.0
        for x in rng.uniform(-5.0, 5.0, size=(self.config.random_points, inst.dimension)):
            for analytic, numeric in zip(inst.gradient(x), finite_difference_gradient(inst, x)):
                error = float(np.linalg.norm(analytic - numeric) / np.linalg.norm(analytic))
                worst_fd = max(worst_fd, error)
        context.add("finite differences", worst_fd <= FINITE_DIFFERENCE_TOLERANCE, worst_fd)
        return context
