"""Bi-objective quality indicators for minimization.

Dominance filtering, the dominated hypervolume by the 2-D sweep, exclusive
hypervolume contributions, and the hypervolume normalized by the
utopian-nadir box of an instance.
"""

from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from qbench.core.exceptions import ValidationError

if TYPE_CHECKING:
    from qbench.problems.instance import Instance


def as_objective_array(points: npt.ArrayLike) -> np.ndarray:
    """Coerce a sequence of (f1, f2) pairs into a finite (n, 2) float array"""
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return np.empty((0, 2))
    pts = pts.reshape(-1, 2) if pts.ndim == 1 else pts
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValidationError(f"Expected (n, 2) objective vectors, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValidationError("Objective vectors must be finite")
    return pts


def nondominated_mask(points: npt.ArrayLike) -> np.ndarray:
    """Boolean mask of the points no other point dominates.

    Of several identical nondominated points only the first (in lexicographic
    order) is kept.
    """
    pts = as_objective_array(points)
    mask = np.zeros(len(pts), dtype=bool)
    if len(pts) == 0:
        return mask
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    f2 = pts[order, 1]
    best_before = np.concatenate(([np.inf], np.minimum.accumulate(f2)[:-1]))
    mask[order[f2 < best_before]] = True
    return mask


def nondominated_filter(points: npt.ArrayLike) -> np.ndarray:
    """Nondominated subset sorted by ascending f1, duplicates kept once.

    Args:
        points: (n, 2) objective vectors

    Returns:
        (m, 2) array of mutually nondominated points
    """
    pts = as_objective_array(points)
    front = pts[nondominated_mask(pts)]
    return front[np.argsort(front[:, 0], kind="stable")]


def hypervolume_2d(points: npt.ArrayLike, reference: npt.ArrayLike) -> float:
    """Area dominated by ``points`` and bounded by ``reference``.

    Points not strictly below the reference in both objectives are ignored.

    Args:
        points: (n, 2) objective vectors, dominated points allowed
        reference: (r1, r2)

    Returns:
        Dominated hypervolume, 0.0 for an empty set
    """
    pts = as_objective_array(points)
    r1, r2 = (float(v) for v in reference)
    pts = pts[(pts[:, 0] < r1) & (pts[:, 1] < r2)]
    if len(pts) == 0:
        return 0.0
    front = nondominated_filter(pts)
    right = np.append(front[1:, 0], r1)
    return float(np.sum((right - front[:, 0]) * (r2 - front[:, 1])))


def hypervolume_contributions(points: npt.ArrayLike, reference: npt.ArrayLike) -> np.ndarray:
    """Exclusive contribution of every point, in input order.

    Points beyond the reference contribute zero, as do exact duplicates.

    Raises:
        ValidationError: If a point is strictly dominated by another one
    """
    pts = as_objective_array(points)
    n = len(pts)
    contributions = np.zeros(n)
    if n == 0:
        return contributions

    order = np.lexsort((pts[:, 1], pts[:, 0]))
    ordered = pts[order]
    unique = ordered[np.any(np.diff(ordered, axis=0, prepend=np.nan), axis=1)]
    if np.any(np.diff(unique[:, 0]) <= 0) or np.any(np.diff(unique[:, 1]) >= 0):
        raise ValidationError("Contributions require mutually nondominated points")

    r1, r2 = (float(v) for v in reference)
    inside = (ordered[:, 0] < r1) & (ordered[:, 1] < r2)
    idx = order[inside]
    box = ordered[inside]
    if len(box) == 0:
        return contributions
    right = np.append(box[1:, 0], r1)
    upper = np.concatenate(([r2], box[:-1, 1]))
    contributions[idx] = (right - box[:, 0]) * (upper - box[:, 1])
    return contributions


def normalized_hypervolume(
    inst: "Instance", points: npt.ArrayLike, reference_offset: float = 0.1
) -> float:
    """Hypervolume w.r.t. the instance reference point over (n1 - u1)(n2 - u2).

    Ranges from 0 to (1 + offset)^2, i.e. 1.21 for the default offset.
    """
    from qbench.analytic.front import nadir_utopian_reference

    nadir, utopian, reference = nadir_utopian_reference(inst, reference_offset)
    area = (nadir[0] - utopian[0]) * (nadir[1] - utopian[1])
    return hypervolume_2d(points, reference) / area
