"""Small dense linear algebra for the instance construction.

All tolerances are relative to the input magnitude, except the Gram-Schmidt
residual threshold which applies to raw Gaussian matrices.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular
from tenacity import retry, retry_if_exception_type, stop_after_attempt

from qbench.core.exceptions import (
    DegeneracyError,
    NotPositiveDefiniteError,
    NumericError,
    ValidationError,
)
from qbench.rng import RandomStream

DEGENERACY_THRESHOLD = 1e-10
PIVOT_THRESHOLD = 1e-14
SYMMETRY_TOLERANCE = 1e-12


def _require_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"Expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("Matrix has non-finite entries")


def _require_symmetric(h: np.ndarray) -> None:
    _require_square(h)
    scale = float(np.max(np.abs(h))) if h.size else 0.0
    if np.max(np.abs(h - h.T), initial=0.0) > SYMMETRY_TOLERANCE * max(scale, 1e-300):
        raise ValidationError("Matrix is not symmetric")


def gram_schmidt(m: np.ndarray, fix_first_column: bool = False) -> np.ndarray:
    """Modified Gram-Schmidt over the columns in index order.

    Every column is projected twice against its predecessors, which keeps
    ||Q^T Q - I|| at rounding level. Column 0 is only normalized. A fixed
    first column that vanishes cannot be redrawn, so it is reported as a
    validation error rather than a degeneracy.
    """
    _require_square(m)
    q = np.array(m, dtype=float, copy=True)
    d = q.shape[1]
    for k in range(d):
        v = q[:, k]
        for _ in range(2):
            for j in range(k):
                v -= np.dot(q[:, j], v) * q[:, j]
        norm = float(np.linalg.norm(v))
        if norm < DEGENERACY_THRESHOLD:
            if k == 0 and fix_first_column:
                raise ValidationError("Fixed first column has vanishing norm")
            raise DegeneracyError(f"Column {k} is numerically dependent (residual {norm:.3e})")
        q[:, k] = v / norm
    return q


@retry(
    stop=stop_after_attempt(3),
    retry=retry_if_exception_type(DegeneracyError),
    reraise=True,
)
def sample_orthogonal(stream: RandomStream, d: int) -> np.ndarray:
    """Haar-uniform orthogonal matrix (up to column signs) from d^2 Gaussians, row-major"""
    if d < 1:
        raise ValidationError(f"Dimension must be positive, got {d}")
    raw = stream.next_gaussians(d * d).reshape(d, d)
    return gram_schmidt(raw)


def cholesky(h: np.ndarray) -> np.ndarray:
    """Lower Cholesky factor A with A A^T = H and positive diagonal"""
    _require_symmetric(h)
    trace = float(np.trace(h))
    try:
        factor = np.linalg.cholesky(h)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefiniteError(f"Matrix is not positive definite: {e}") from e
    pivots = np.diag(factor) ** 2
    if trace <= 0 or np.any(pivots <= PIVOT_THRESHOLD * trace):
        raise NotPositiveDefiniteError("Matrix is not positive definite (pivot below threshold)")
    return factor


def symmetric_eigen(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors (columns of U) and ascending eigenvalues of a symmetric matrix"""
    _require_symmetric(h)
    try:
        values, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as e:
        raise NumericError(f"Symmetric eigensolver did not converge: {e}") from e
    return vectors, values


@dataclass(frozen=True)
class SpdPair:
    """Pair of symmetric positive definite matrices of equal dimension"""

    h1: np.ndarray
    h2: np.ndarray

    def __post_init__(self) -> None:
        _require_symmetric(self.h1)
        _require_symmetric(self.h2)
        if self.h1.shape != self.h2.shape:
            raise ValidationError(f"Shape mismatch {self.h1.shape} vs {self.h2.shape}")
        cholesky(self.h1)
        cholesky(self.h2)


def generalized_eigenpairs(pair: SpdPair) -> tuple[np.ndarray, np.ndarray]:
    """Solve H1 v = lambda H2 v by Cholesky reduction.

    Returns ascending eigenvalues and the unit-length eigenvectors as columns.
    """
    lower = cholesky(pair.h2)
    half = solve_triangular(lower, pair.h1, lower=True)
    reduced = solve_triangular(lower, half.T, lower=True)
    reduced = 0.5 * (reduced + reduced.T)
    w, values = symmetric_eigen(reduced)
    vectors = solve_triangular(lower.T, w, lower=False)
    vectors /= np.linalg.norm(vectors, axis=0)
    return values, vectors


def condition_number(h: np.ndarray) -> float:
    """Quotient of the extreme eigenvalues of a symmetric positive definite matrix"""
    _, values = symmetric_eigen(h)
    if values[0] <= 0:
        raise NotPositiveDefiniteError("Condition number requires a positive definite matrix")
    return float(values[-1] / values[0])
