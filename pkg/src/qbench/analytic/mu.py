"""Optimal mu-distributions on the analytic front.

In normalized objective space the front of power s is (t^s, (1 - t)^s) and
the reference point is (1 + offset, 1 + offset), so the optimal t-values
depend on (s, mu, offset) only. They are found by cyclic coordinate ascent:
each t_k maximizes its own exclusive contribution between its neighbours.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from qbench.analytic.front import DEFAULT_REFERENCE_OFFSET, FrontParam, nadir_utopian_reference
from qbench.core.exceptions import ValidationError
from qbench.indicators import hypervolume_2d
from qbench.problems.instance import Instance

logger = logging.getLogger(__name__)

SWEEP_TOLERANCE = 1e-12
MAX_SWEEPS = 10_000
_XATOL = 1e-13


@dataclass(frozen=True)
class MuDistribution:
    """Hypervolume-optimal placement of mu points on an instance's front"""

    mu: int
    t_values: np.ndarray
    hypervolume: float
    reference_point: tuple[float, float]
    normalized_hypervolume: float
    converged: bool = True
    sweeps: int = 0

    def front_points(self, inst: Instance) -> np.ndarray:
        return FrontParam.from_instance(inst).points(self.t_values)

    def to_record(self, inst: Instance) -> dict[str, Any]:
        return {
            "class_name": inst.class_name,
            "dimension": inst.dimension,
            "index": inst.index,
            "mu": self.mu,
            "t_values": [float(t) for t in self.t_values],
            "hypervolume": self.hypervolume,
            "normalized_hypervolume": self.normalized_hypervolume,
        }


def normalized_front_hypervolume(t_values: npt.ArrayLike, s: float, reference: float) -> float:
    t = np.asarray(t_values, dtype=float)
    return hypervolume_2d(np.column_stack((t**s, (1.0 - t) ** s)), (reference, reference))


@lru_cache(maxsize=256)
def optimal_t_values(
    s: float,
    mu: int,
    reference_offset: float = DEFAULT_REFERENCE_OFFSET,
    tolerance: float = SWEEP_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[tuple[float, ...], float, bool, int]:
    """(t-values, normalized hypervolume, converged, sweeps) for one front shape"""
    if mu < 1:
        raise ValidationError(f"mu must be positive, got {mu}")
    if reference_offset < 0:
        raise ValidationError(f"Reference offset must be non-negative, got {reference_offset}")

    r = 1.0 + reference_offset
    t = (np.arange(mu) + 0.5) / mu
    hv = normalized_front_hypervolume(t, s, r)
    converged = False
    sweeps = 0

    while sweeps < max_sweeps:
        sweeps += 1
        for k in range(mu):
            lo = t[k - 1] if k > 0 else 0.0
            hi = t[k + 1] if k < mu - 1 else 1.0
            right = t[k + 1] ** s if k < mu - 1 else r
            upper = (1.0 - t[k - 1]) ** s if k > 0 else r

            def loss(x: float, right: float = right, upper: float = upper) -> float:
                return -(right - x**s) * (upper - (1.0 - x) ** s)

            result = minimize_scalar(loss, bounds=(lo, hi), method="bounded", options={"xatol": _XATOL})
            if result.fun < loss(t[k]):
                t[k] = result.x

        new_hv = normalized_front_hypervolume(t, s, r)
        gain = new_hv - hv
        hv = max(hv, new_hv)
        if gain <= tolerance:
            converged = True
            break

    if not converged:
        logger.warning("mu-distribution s=%g mu=%d did not converge in %d sweeps", s, mu, sweeps)
    else:
        logger.debug("mu-distribution s=%g mu=%d converged after %d sweeps", s, mu, sweeps)
    return tuple(float(v) for v in t), float(hv), converged, sweeps


def optimal_mu_distribution(
    inst: Instance, mu: int, reference_offset: float = DEFAULT_REFERENCE_OFFSET
) -> MuDistribution:
    """Hypervolume-optimal mu points on the front of ``inst``.

    The default offset uses the reference point (11 n - u) / 10; an offset of
    0 uses the nadir itself.
    """
    return scale_solution(inst, mu, reference_offset, optimal_t_values(inst.s, mu, reference_offset))


def scale_solution(
    inst: Instance,
    mu: int,
    reference_offset: float,
    solution: tuple[tuple[float, ...], float, bool, int],
) -> MuDistribution:
    """Attach an instance's objective scale to a normalized solution of ``optimal_t_values``"""
    t_values, normalized, converged, sweeps = solution
    nadir, utopian, reference = nadir_utopian_reference(inst, reference_offset)
    area = float((nadir[0] - utopian[0]) * (nadir[1] - utopian[1]))
    return MuDistribution(
        mu=mu,
        t_values=np.array(t_values),
        hypervolume=normalized * area,
        reference_point=(float(reference[0]), float(reference[1])),
        normalized_hypervolume=normalized,
        converged=converged,
        sweeps=sweeps,
    )
