"""Shape stage - convex, linear or concave front"""

import numpy as np

from qbench.analytic.front import FrontParam, pareto_set_point
from qbench.core.context import VerificationContext
from qbench.problems.classes import Shape
from qbench.stages.base import BaseStage

SHAPE_TOLERANCE = 1e-9


def slope_differences(normalized: np.ndarray) -> np.ndarray:
    """Differences of successive secant slopes of f2 over f1 (points sorted by f1)"""
    df = np.diff(normalized, axis=0)
    slopes = df[:, 1] / df[:, 0]
    return np.diff(slopes)


class ShapeStage(BaseStage):
    """Front curvature must match the shape suffix"""

    name = "shape"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        inst = context.instance
        param = FrontParam.from_instance(inst)
        ts = np.linspace(0.0, 1.0, self.config.shape_grid)
        images = inst.evaluate_many(np.array([pareto_set_point(inst, t) for t in ts]))
        diffs = slope_differences(param.normalize(images))

        shape = inst.problem_class.shape
        if shape == Shape.CONVEX:
            worst = float(max(0.0, -diffs.min()))
        elif shape == Shape.LINEAR:
            worst = float(np.abs(diffs).max())
        else:
            worst = float(max(0.0, diffs.max()))
        context.add(f"front shape {shape.value}", worst <= SHAPE_TOLERANCE, worst)

        f1, f2 = images[:, 0], images[:, 1]
        strict = bool(np.all(np.diff(f1) > 0) and np.all(np.diff(f2) < 0))
        context.add("strict trade-off", strict)
        return context
