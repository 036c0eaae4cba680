"""Sampling procedures for spectra, constrained rotations and the case 9| realignment"""

import numpy as np
from tenacity import retry, retry_if_exception_type, stop_after_attempt

from qbench.core.exceptions import DegeneracyError, ValidationError
from qbench.linalg import gram_schmidt
from qbench.problems.classes import Spectrum
from qbench.rng import RandomStream


def base_spectrum(d: int, kappa: float, kind: Spectrum = Spectrum.ELLIPSOID) -> np.ndarray:
    """Sorted eigenvalues with minimum 1 and maximum kappa"""
    if d < 2:
        raise ValidationError(f"A spectrum needs at least 2 entries, got {d}")
    if kind == Spectrum.ELLIPSOID:
        return kappa ** (np.arange(d) / (d - 1))
    if kind == Spectrum.CIGAR:
        return np.concatenate(([1.0], np.full(d - 1, kappa)))
    return np.concatenate((np.ones(d - 1), [kappa]))


def build_spectrum(
    stream: RandomStream,
    d: int,
    kappa: float,
    duplicate: bool,
    kind: Spectrum = Spectrum.ELLIPSOID,
    positions: tuple[int, int] | None = None,
) -> tuple[np.ndarray, tuple[int, int] | None]:
    """Randomly permuted spectrum, optionally with one duplicated eigenvalue.

    With duplication the (d-1)-dimensional spectrum is built, one value is
    chosen uniformly and appended again, and the two positions holding the
    pair are reported. Passing ``positions`` pins the duplicated pair to those
    two coordinates and permutes the remaining values over the others.
    """
    if not duplicate:
        values = base_spectrum(d, kappa, kind)
        perm = stream.sample_permutation(d)
        return values[perm], None

    if d < 3:
        raise ValidationError(f"Duplicating an eigenvalue requires dimension >= 3, got {d}")
    values = base_spectrum(d - 1, kappa, kind)
    chosen = stream.next_index(d - 1)

    if positions is not None:
        i, j = positions
        rest = np.delete(values, chosen)
        others = [k for k in range(d) if k not in (i, j)]
        perm = stream.sample_permutation(d - 2)
        spectrum = np.empty(d)
        spectrum[[i, j]] = values[chosen]
        spectrum[others] = rest[perm]
        return spectrum, (i, j)

    extended = np.append(values, values[chosen])
    perm = stream.sample_permutation(d)
    spectrum = extended[perm]
    first = int(np.flatnonzero(perm == chosen)[0])
    second = int(np.flatnonzero(perm == d - 1)[0])
    return spectrum, (min(first, second), max(first, second))


def constrained_raw_matrix(stream: RandomStream, d: int, axis: int) -> np.ndarray:
    """Gaussian matrix with row and column ``axis`` zeroed and a one on the diagonal"""
    if not 0 <= axis < d:
        raise ValidationError(f"Axis index {axis} out of range for dimension {d}")
    raw = stream.next_gaussians(d * d).reshape(d, d)
    raw[axis, :] = 0.0
    raw[:, axis] = 0.0
    raw[axis, axis] = 1.0
    return raw


@retry(
    stop=stop_after_attempt(3),
    retry=retry_if_exception_type(DegeneracyError),
    reraise=True,
)
def sample_constrained_orthogonal(stream: RandomStream, d: int, axis: int) -> np.ndarray:
    """Orthogonal matrix whose column ``axis`` is the standard basis vector e_axis"""
    return gram_schmidt(constrained_raw_matrix(stream, d, axis))


@retry(
    stop=stop_after_attempt(3),
    retry=retry_if_exception_type(DegeneracyError),
    reraise=True,
)
def _rotation_with_first_column(stream: RandomStream, delta: np.ndarray) -> np.ndarray:
    d = delta.shape[0]
    raw = np.empty((d, d))
    raw[:, 1:] = stream.next_gaussians(d * (d - 1)).reshape(d, d - 1)
    raw[:, 0] = delta
    return gram_schmidt(raw, fix_first_column=True)


def realign_case9(
    stream: RandomStream, u1: np.ndarray, u2: np.ndarray, delta: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rotate both Hessians so that delta becomes a standard basis vector.

    U has delta as column 0 before that column is swapped with a uniformly
    chosen column k; the returned triple is (U^T U1, U^T U2, U^T delta) with
    U^T delta = e_k.
    """
    if abs(float(np.linalg.norm(delta)) - 1.0) > 1e-12:
        raise ValidationError("Realignment requires a unit-length delta")
    rotation = _rotation_with_first_column(stream, delta)
    k = stream.next_index(delta.shape[0])
    rotation[:, [0, k]] = rotation[:, [k, 0]]
    # exact basis vector; U^T delta differs from e_k by rounding only
    new_delta = np.zeros_like(delta)
    new_delta[k] = 1.0
    return rotation.T @ u1, rotation.T @ u2, new_delta
