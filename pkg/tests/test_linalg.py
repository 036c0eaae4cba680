"""Test dense linear algebra helpers"""

import numpy as np
import pytest
from scipy import stats

from qbench.core.exceptions import DegeneracyError, NotPositiveDefiniteError, ValidationError
from qbench.linalg import (
    SpdPair,
    cholesky,
    condition_number,
    generalized_eigenpairs,
    gram_schmidt,
    sample_orthogonal,
    symmetric_eigen,
)
from qbench.rng import RandomStream


class TestGramSchmidt:
    """Tests for gram_schmidt"""

    def test_hand_computed_example(self) -> None:
        q = gram_schmidt(np.array([[1.0, 1.0], [1.0, 0.0]]))
        r = 1 / np.sqrt(2)
        np.testing.assert_allclose(q, [[r, r], [r, -r]], atol=1e-14)

    def test_orthogonality(self) -> None:
        raw = np.random.default_rng(0).standard_normal((12, 12))
        q = gram_schmidt(raw)
        assert np.max(np.abs(q.T @ q - np.eye(12))) <= 1e-12

    def test_fixed_first_column_keeps_direction(self) -> None:
        raw = np.random.default_rng(1).standard_normal((5, 5))
        q = gram_schmidt(raw, fix_first_column=True)
        np.testing.assert_allclose(q[:, 0], raw[:, 0] / np.linalg.norm(raw[:, 0]), atol=1e-15)

    def test_dependent_columns(self) -> None:
        with pytest.raises(DegeneracyError):
            gram_schmidt(np.array([[1.0, 2.0], [1.0, 2.0]]))

    def test_vanishing_fixed_column(self) -> None:
        with pytest.raises(ValidationError):
            gram_schmidt(np.array([[0.0, 1.0], [0.0, 0.0]]), fix_first_column=True)

    def test_rejects_non_square(self) -> None:
        with pytest.raises(ValidationError):
            gram_schmidt(np.ones((2, 3)))


def test_sample_orthogonal_is_orthogonal() -> None:
    """Sampled rotations are orthogonal and reproducible"""
    q = sample_orthogonal(RandomStream(42), 10)
    assert np.max(np.abs(q.T @ q - np.eye(10))) <= 1e-12
    np.testing.assert_array_equal(q, sample_orthogonal(RandomStream(42), 10))


def test_two_dimensional_rotation_angle_is_uniform() -> None:
    """The first column of a 2-D sample points in a uniformly distributed direction"""
    stream = RandomStream(2718)
    angles = []
    for _ in range(4000):
        q = sample_orthogonal(stream, 2)
        angles.append(np.arctan2(q[1, 0], q[0, 0]))
    assert stats.kstest(angles, "uniform", args=(-np.pi, 2 * np.pi)).pvalue > 1e-3


class TestCholesky:
    """Tests for cholesky"""

    def test_diagonal(self) -> None:
        np.testing.assert_allclose(cholesky(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))

    def test_reconstruction(self) -> None:
        a = np.random.default_rng(2).standard_normal((6, 6))
        h = a @ a.T + 6 * np.eye(6)
        factor = cholesky(h)
        np.testing.assert_allclose(factor @ factor.T, h, rtol=1e-12)
        assert np.all(np.diag(factor) > 0)

    def test_indefinite(self) -> None:
        with pytest.raises(NotPositiveDefiniteError):
            cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_asymmetric(self) -> None:
        with pytest.raises(ValidationError):
            cholesky(np.array([[1.0, 0.5], [0.0, 1.0]]))


class TestEigen:
    """Tests for symmetric and generalized eigenproblems"""

    def test_symmetric_eigen_sorts(self) -> None:
        vectors, values = symmetric_eigen(np.diag([3.0, 1.0, 2.0]))
        np.testing.assert_allclose(values, [1.0, 2.0, 3.0])
        np.testing.assert_allclose(np.abs(vectors), [[0, 0, 1], [1, 0, 0], [0, 1, 0]], atol=1e-15)

    def test_generalized_axis_example(self) -> None:
        values, vectors = generalized_eigenpairs(SpdPair(np.eye(2), np.diag([1.0, 4.0])))
        np.testing.assert_allclose(values, [0.25, 1.0])
        np.testing.assert_allclose(np.abs(vectors), np.eye(2)[:, ::-1], atol=1e-15)

    def test_generalized_residual(self) -> None:
        rng = np.random.default_rng(3)
        a, b = rng.standard_normal((2, 8, 8))
        h1 = a @ a.T + np.eye(8)
        h2 = b @ b.T + np.eye(8)
        values, vectors = generalized_eigenpairs(SpdPair(h1, h2))
        assert np.all(np.diff(values) >= 0)
        for k in range(8):
            v = vectors[:, k]
            residual = np.linalg.norm(h1 @ v - values[k] * h2 @ v)
            assert residual <= 1e-8 * (np.linalg.norm(h1 @ v) + np.linalg.norm(h2 @ v))
            assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-14)

    def test_generalized_eigenvectors_are_h2_orthogonal(self) -> None:
        """Unit eigenvectors rescaled by their H2-norm give V^T H2 V = I"""
        rng = np.random.default_rng(5)
        a, b = rng.standard_normal((2, 10, 10))
        h1 = a @ a.T + np.eye(10)
        h2 = b @ b.T + np.eye(10)
        _, vectors = generalized_eigenpairs(SpdPair(h1, h2))
        gram = vectors.T @ h2 @ vectors
        off_diagonal = gram - np.diag(np.diag(gram))
        assert np.max(np.abs(off_diagonal)) <= 1e-8 * np.linalg.norm(h2, 2)
        scaled = vectors / np.sqrt(np.diag(gram))
        np.testing.assert_allclose(scaled.T @ h2 @ scaled, np.eye(10), atol=1e-8)

    def test_condition_number(self) -> None:
        assert condition_number(np.diag([1.0, 10.0, 1000.0])) == pytest.approx(1000.0, rel=1e-12)

    def test_spd_pair_shape_mismatch(self) -> None:
        with pytest.raises(ValidationError):
            SpdPair(np.eye(2), np.eye(3))
