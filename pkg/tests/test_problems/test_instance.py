"""Test instance evaluation and gradients"""

import numpy as np
import pytest

from qbench.core.exceptions import DomainError, ValidationError
from tests.conftest import make_instance, sphere_pair


class TestEvaluate:
    """Tests for Instance.evaluate"""

    def test_sphere_midpoint(self) -> None:
        inst = sphere_pair(2, 2.0)
        assert inst.evaluate(np.array([0.5, 0.0])) == pytest.approx((0.125, 0.125), abs=1e-15)

    def test_linear_shape_midpoint(self) -> None:
        inst = sphere_pair(2, 1.0)
        assert inst.evaluate(np.array([0.5, 0.0])) == pytest.approx((0.25, 0.25), abs=1e-15)

    def test_own_optimum(self, rotated_instance) -> None:
        inst = rotated_instance
        f1, f2 = inst.evaluate(inst.x1_star)
        assert f1 == inst.b1
        delta = inst.delta
        expected = 0.5 * inst.a2 * (delta @ inst.h2 @ delta) ** (inst.s / 2) + inst.b2
        assert f2 == pytest.approx(expected, rel=1e-12)

    def test_batch_matches_rows(self, rotated_instance) -> None:
        points = np.random.default_rng(0).uniform(-5, 5, size=(20, 10))
        batch = rotated_instance.evaluate_many(points)
        rows = np.array([rotated_instance.evaluate(x) for x in points])
        np.testing.assert_allclose(batch, rows, rtol=1e-13)

    def test_dimension_mismatch(self, rotated_instance) -> None:
        with pytest.raises(ValidationError):
            rotated_instance.evaluate(np.zeros(3))
        with pytest.raises(ValidationError):
            rotated_instance.evaluate_many(np.zeros((4, 3)))

    def test_non_finite_point(self, rotated_instance) -> None:
        x = np.zeros(10)
        x[0] = np.nan
        with pytest.raises(ValidationError):
            rotated_instance.evaluate(x)


class TestGradient:
    """Tests for Instance.gradient"""

    def test_convex_gradient_is_hessian_product(self) -> None:
        inst = make_instance("6/C", 5, 0)
        v = np.arange(5.0) / 10
        g1, _ = inst.gradient(inst.x1_star + v)
        np.testing.assert_allclose(g1, inst.a1 * inst.h1 @ v, rtol=1e-10)

    def test_singular_point_for_concave(self) -> None:
        inst = make_instance("6/J", 5, 0)
        with pytest.raises(DomainError):
            inst.gradient(inst.x1_star)

    def test_convex_optimum_is_zero(self) -> None:
        inst = make_instance("6/C", 5, 0)
        g1, _ = inst.gradient(inst.x1_star)
        np.testing.assert_array_equal(g1, np.zeros(5))
