"""Analytic Pareto set and front of an instance.

The Pareto set is the segment x(t) = (1 - t) x1* + t x2*, t in [0, 1], and
its image is

    f(t) = (u1 + t^s (n1 - u1), u2 + (1 - t)^s (n2 - u2))

with utopian point u = (b1, b2) and nadir n_i = f_i at the other optimum.
In normalized objective space (f - u) / (n - u) every front of power s is
the curve (t^s, (1 - t)^s).
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.linalg import solve

from qbench.core.exceptions import ValidationError
from qbench.problems.instance import Instance

DEFAULT_REFERENCE_OFFSET = 0.1
_BISECTION_STEPS = 80


@dataclass(frozen=True)
class FrontParam:
    """Utopian and nadir components with the power s"""

    u1: float
    u2: float
    n1: float
    n2: float
    s: float

    def __post_init__(self) -> None:
        if not (self.n1 > self.u1 and self.n2 > self.u2):
            raise ValidationError("Nadir must strictly exceed the utopian point")

    @classmethod
    def from_instance(cls, inst: Instance) -> "FrontParam":
        n1, _ = inst.evaluate(inst.x2_star)
        _, n2 = inst.evaluate(inst.x1_star)
        return cls(u1=inst.b1, u2=inst.b2, n1=n1, n2=n2, s=inst.s)

    @property
    def span(self) -> np.ndarray:
        return np.array([self.n1 - self.u1, self.n2 - self.u2])

    def point(self, t: float) -> tuple[float, float]:
        _check_unit(t, "t")
        return (
            self.u1 + t**self.s * (self.n1 - self.u1),
            self.u2 + (1.0 - t) ** self.s * (self.n2 - self.u2),
        )

    def points(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if np.any((t < 0) | (t > 1)):
            raise ValidationError("t values must lie in [0, 1]")
        return np.column_stack(
            (
                self.u1 + t**self.s * (self.n1 - self.u1),
                self.u2 + (1.0 - t) ** self.s * (self.n2 - self.u2),
            )
        )

    def normalize(self, f: npt.ArrayLike) -> np.ndarray:
        """Map objective vectors to (f - u) / (n - u)"""
        f = np.asarray(f, dtype=float)
        return (f - np.array([self.u1, self.u2])) / self.span


def _check_unit(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {value}")


def pareto_set_point(inst: Instance, t: float) -> np.ndarray:
    _check_unit(t, "t")
    return (1.0 - t) * inst.x1_star + t * inst.x2_star


def front_point(inst: Instance, t: float) -> tuple[float, float]:
    return FrontParam.from_instance(inst).point(t)


def nadir_utopian_reference(
    inst: Instance, reference_offset: float = DEFAULT_REFERENCE_OFFSET
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nadir n, utopian u and reference r = n + offset (n - u).

    The default offset gives r = (11 n - u) / 10.
    """
    param = FrontParam.from_instance(inst)
    nadir = np.array([param.n1, param.n2])
    utopian = np.array([param.u1, param.u2])
    if reference_offset == DEFAULT_REFERENCE_OFFSET:
        reference = (11.0 * nadir - utopian) / 10.0
    else:
        reference = nadir + reference_offset * (nadir - utopian)
    return nadir, utopian, reference


def weight_to_point(inst: Instance, c: float) -> np.ndarray:
    """Minimizer of c f1 + (1 - c) f2 on the quadratic geometry.

    Solves (c H1 + (1 - c) H2) x = c H1 x1* + (1 - c) H2 x2*.
    """
    _check_unit(c, "c")
    matrix = c * inst.h1 + (1.0 - c) * inst.h2
    rhs = c * (inst.h1 @ inst.x1_star) + (1.0 - c) * (inst.h2 @ inst.x2_star)
    return solve(matrix, rhs, assume_a="pos")


def weight_from_t(inst: Instance, t: float) -> float:
    """Weight c of the Pareto set point at t, from (1 - c)(1 - t) g = c t (1 - g)"""
    _check_unit(t, "t")
    g = inst.g_weight
    return (1.0 - t) * g / ((1.0 - t) * g + t * (1.0 - g))


def t_from_weight(inst: Instance, c: float) -> float:
    _check_unit(c, "c")
    g = inst.g_weight
    return (1.0 - c) * g / ((1.0 - c) * g + c * (1.0 - g))


def distance_to_pareto_set(inst: Instance, x: np.ndarray) -> float:
    """Euclidean distance from x to the Pareto segment"""
    x = np.asarray(x, dtype=float)
    if x.shape != (inst.dimension,):
        raise ValidationError(f"Point has shape {x.shape}, expected ({inst.dimension},)")
    delta = inst.delta
    t = float(np.dot(x - inst.x1_star, delta) / np.dot(delta, delta))
    t = min(max(t, 0.0), 1.0)
    return float(np.linalg.norm(x - ((1.0 - t) * inst.x1_star + t * inst.x2_star)))


def curve_distance(normalized: npt.ArrayLike, s: float) -> np.ndarray:
    """Chebyshev (additive epsilon) distance of normalized points to (t^s, (1 - t)^s).

    For a point p the distance max(|t^s - p1|, |(1 - t)^s - p2|) is minimal
    either at an end of [0, 1] or where t^s - (1 - t)^s = p1 - p2; the left
    side is increasing in t, so the crossing is found by bisection (closed
    form for s = 1 and s = 2).
    """
    p = np.atleast_2d(np.asarray(normalized, dtype=float))
    k = p[:, 0] - p[:, 1]

    if s in (1.0, 2.0):
        crossing = np.clip(0.5 * (1.0 + k), 0.0, 1.0)
    else:
        lo = np.zeros_like(k)
        hi = np.ones_like(k)
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            below = mid**s - (1.0 - mid) ** s < k
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        crossing = 0.5 * (lo + hi)

    def gap(t: np.ndarray) -> np.ndarray:
        return np.maximum(np.abs(t**s - p[:, 0]), np.abs((1.0 - t) ** s - p[:, 1]))

    return np.minimum(gap(crossing), np.minimum(gap(np.zeros_like(k)), gap(np.ones_like(k))))


def distance_to_front(inst: Instance, f: npt.ArrayLike) -> float | np.ndarray:
    """Additive epsilon distance of objective vectors to the front in normalized space.

    Returns a float for a single pair and an array for an (n, 2) batch.
    """
    param = FrontParam.from_instance(inst)
    f = np.asarray(f, dtype=float)
    distances = curve_distance(param.normalize(f), param.s)
    return float(distances[0]) if f.ndim == 1 else distances
