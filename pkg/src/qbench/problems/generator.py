"""Deterministic instance construction for the 54 problem classes.

Every random quantity comes from two MT19937 streams keyed by
(class, dimension, index): the ``geo`` stream drives geometry, the ``aff``
stream the affine scaling. The draw order on ``geo`` is

1. alignment axis index (1| to 8|)
2. raw rotation shared by cases 7 and 8, or U1 for case 9
3. raw rotation U2 for cases 5, 6 and 9
4. spectrum of D1, then D2
5. remaining delta parameters
6. case 9| realignment
7. Pareto set midpoint
"""

import logging
import math

import numpy as np

from qbench.core.exceptions import ValidationError
from qbench.linalg import SpdPair, generalized_eigenpairs, sample_orthogonal
from qbench.problems.classes import ProblemClass
from qbench.problems.instance import Instance, hessian
from qbench.problems.sampling import (
    build_spectrum,
    realign_case9,
    sample_constrained_orthogonal,
)
from qbench.rng import InstanceKey, RandomStream

logger = logging.getLogger(__name__)

MIDPOINT_BOUND = 4.5
MAX_LOG10_SCALE = 6.0
MIN_PENCIL_CONDITION = 10.0
MAX_SPECTRUM_REDRAWS = 100
ANGLE_CLEARANCE = 1e-4


def sample_instance(problem_class: ProblemClass, index: int) -> Instance:
    """Build instance ``index`` of ``problem_class``.

    Raises ValidationError for negative indices and for classes 2/, 3/, 4/
    below dimension 3.
    """
    if index < 0:
        raise ValidationError(f"Instance index must be non-negative, got {index}")
    d = problem_class.dimension
    if problem_class.needs_duplication and d < 3:
        raise ValidationError(
            f"Class {problem_class.name} duplicates an eigenvalue and requires dimension >= 3, got {d}"
        )

    geo = RandomStream.from_key(InstanceKey(problem_class.name, d, index, "geo"))
    aff = RandomStream.from_key(InstanceKey(problem_class.name, d, index, "aff"))

    case = problem_class.case_id
    aligned = problem_class.aligned
    identity = np.eye(d)

    # (1)
    axis = geo.next_index(d) if aligned and case <= 8 else None

    # (2) and (3)
    u1 = identity
    u2 = identity
    if case in (7, 8):
        u1 = _rotation(geo, d, axis)
        u2 = u1
    elif case == 9:
        u1 = sample_orthogonal(geo, d)
    if case in (5, 6):
        u2 = _rotation(geo, d, axis)
    elif case == 9:
        u2 = sample_orthogonal(geo, d)

    # (4)
    d1, d2, positions = _sample_spectra(geo, problem_class)

    # (5)
    if axis is not None:
        delta = np.zeros(d)
        delta[axis] = 1.0
    elif case == 1:
        delta = geo.next_gaussians(d)
        delta /= np.linalg.norm(delta)
    elif case in (2, 3, 4):
        assert positions is not None
        delta = _angle_direction(geo, d, positions)
    elif case == 7:
        delta = u1[:, geo.next_index(d)].copy()
    else:
        _, vectors = generalized_eigenpairs(SpdPair(hessian(u1, d1), hessian(u2, d2)))
        delta = vectors[:, geo.next_index(d)].copy()
        delta /= np.linalg.norm(delta)

    # (6)
    if case == 9 and aligned:
        u1, u2, delta = realign_case9(geo, u1, u2, delta)

    # (7)
    mid = geo.sample_truncated_gaussian_vector(d, MIDPOINT_BOUND)
    x1_star = mid - 0.5 * delta
    x2_star = mid + 0.5 * delta

    a1 = 10.0 ** (MAX_LOG10_SCALE * aff.next_uniform())
    a2 = 10.0 ** (MAX_LOG10_SCALE * aff.next_uniform())
    b1 = a1 * (2.0 * aff.next_uniform() - 1.0)
    b2 = a2 * (2.0 * aff.next_uniform() - 1.0)

    q1 = float(delta @ hessian(u1, d1) @ delta)
    q2 = float(delta @ hessian(u2, d2) @ delta)

    instance = Instance(
        problem_class=problem_class,
        index=index,
        u1=u1,
        u2=u2,
        d1=d1,
        d2=d2,
        x1_star=x1_star,
        x2_star=x2_star,
        a1=a1,
        a2=a2,
        b1=b1,
        b2=b2,
        s=problem_class.power,
        g_weight=q2 / (q1 + q2),
    )
    logger.debug("Sampled %s d=%d index=%d (g=%.6f)", problem_class.name, d, index, instance.g_weight)
    return instance


def _rotation(stream: RandomStream, d: int, axis: int | None) -> np.ndarray:
    if axis is None:
        return sample_orthogonal(stream, d)
    return sample_constrained_orthogonal(stream, d, axis)


def _sample_spectra(
    stream: RandomStream, problem_class: ProblemClass
) -> tuple[np.ndarray, np.ndarray, tuple[int, int] | None]:
    d = problem_class.dimension
    kappa = problem_class.kappa
    kind = problem_class.spectrum
    duplicate = problem_class.needs_duplication
    case = problem_class.case_id
    ones = np.ones(d)

    if case == 1:
        return ones, ones.copy(), None
    if case in (2, 5):
        d2, positions = build_spectrum(stream, d, kappa, duplicate, kind)
        return ones, d2, positions
    if case in (3, 7):
        shared, positions = build_spectrum(stream, d, kappa, duplicate, kind)
        return shared, shared.copy(), positions

    d1, positions = build_spectrum(stream, d, kappa, duplicate, kind)
    if case in (6, 9):
        d2, _ = build_spectrum(stream, d, kappa, False, kind)
        return d1, d2, positions

    # cases 4 and 8 need clearly different Hessians
    for _ in range(MAX_SPECTRUM_REDRAWS):
        d2, _ = build_spectrum(stream, d, kappa, duplicate, kind, positions=positions)
        ratio = d2 / d1
        if not np.array_equal(d1, d2) and ratio.max() / ratio.min() >= MIN_PENCIL_CONDITION:
            return d1, d2, positions
    raise ValidationError(
        f"Could not draw distinct spectra for class {problem_class.name} with kappa={kappa}"
    )


def _angle_direction(stream: RandomStream, d: int, positions: tuple[int, int]) -> np.ndarray:
    """cos(alpha) e_i + sin(alpha) e_j, alpha kept away from multiples of pi/2"""
    quarter = 0.5 * math.pi
    while True:
        alpha = 2.0 * math.pi * stream.next_uniform()
        nearest = round(alpha / quarter) * quarter
        if abs(alpha - nearest) >= ANGLE_CLEARANCE:
            break
    i, j = positions
    delta = np.zeros(d)
    delta[i] = math.cos(alpha)
    delta[j] = math.sin(alpha)
    return delta
