"""Grid front stage - brute-force nondominated grid against the analytic front (d = 2)"""

import logging

import numpy as np

from qbench.analytic.front import curve_distance
from qbench.core.context import VerificationContext
from qbench.indicators import nondominated_filter
from qbench.problems.instance import Instance
from qbench.stages.base import BaseStage

logger = logging.getLogger(__name__)

BOX = 5.0
GRID_DIAGONALS = 2.0
_CHUNK = 256


def quadratic_scale(inst: Instance, points: np.ndarray) -> np.ndarray:
    """Map points to (q1 / q1(x2*), q2 / q2(x1*)), where the Pareto set image is (t^2, (1 - t)^2)"""
    delta = inst.delta
    q1 = (((points - inst.x1_star) @ inst.u1) ** 2 * inst.d1).sum(axis=1)
    q2 = (((points - inst.x2_star) @ inst.u2) ** 2 * inst.d2).sum(axis=1)
    return np.column_stack((q1 / (delta @ inst.h1 @ delta), q2 / (delta @ inst.h2 @ delta)))


def grid_tolerance(inst: Instance, radius: float) -> float:
    """Largest change of a normalized quadratic form over a step of length ``radius`` near the segment"""
    delta = inst.delta
    worst = 0.0
    for h in (inst.h1, inst.h2):
        hd = h @ delta
        bound = 2.0 * np.linalg.norm(hd) * radius + np.linalg.norm(h, 2) * radius**2
        worst = max(worst, float(bound / (delta @ hd)))
    return worst


def set_distance(samples: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Chebyshev distance of each sample to its nearest reference point"""
    out = np.empty(len(samples))
    for start in range(0, len(samples), _CHUNK):
        block = samples[start : start + _CHUNK]
        gaps = np.abs(block[:, None, :] - reference[None, :, :]).max(axis=2)
        out[start : start + _CHUNK] = gaps.min(axis=1)
    return out


class GridFrontStage(BaseStage):
    """Nondominated points of a dense grid over the box must trace the analytic front"""

    name = "grid-front"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        inst = context.instance
        if inst.dimension != 2:
            logger.info("Grid front check needs d = 2, skipping %s d=%d", inst.class_name, inst.dimension)
            context.add("grid front", True, detail=f"skipped for d = {inst.dimension}")
            return context

        size = self.config.grid_size
        axis = np.linspace(-BOX, BOX, size)
        xx, yy = np.meshgrid(axis, axis)
        grid = np.column_stack((xx.ravel(), yy.ravel()))

        spacing = 2.0 * BOX / (size - 1)
        tolerance = grid_tolerance(inst, GRID_DIAGONALS * np.sqrt(2.0) * spacing)
        images = nondominated_filter(quadratic_scale(inst, grid))
        context.metadata["grid_nondominated"] = len(images)
        context.metadata["grid_tolerance"] = tolerance

        forward = float(curve_distance(images, 2.0).max())
        context.add("grid front forward", forward <= tolerance, forward, f"tolerance {tolerance:.3e}")

        t = np.linspace(0.0, 1.0, self.config.front_samples)
        samples = np.column_stack((t**2, (1.0 - t) ** 2))
        covered = float(np.mean(set_distance(samples, images) <= tolerance))
        context.add(
            "grid front converse",
            covered >= self.config.converse_fraction,
            1.0 - covered,
            f"{covered:.2%} of front samples covered",
        )
        return context
