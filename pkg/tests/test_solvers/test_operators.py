"""Test variation operators"""

import numpy as np
import pytest

from qbench.solvers.operators import (
    mutation_delta,
    polynomial_mutation,
    sbx_crossover,
    spread_factor,
)


class TestSBX:
    """Tests for simulated binary crossover"""

    def test_spread_factor_midpoint(self) -> None:
        assert spread_factor(np.array([0.5]), 20.0)[0] == pytest.approx(1.0)

    def test_spread_factor_monotone(self) -> None:
        beta = spread_factor(np.linspace(0.01, 0.99, 50), 15.0)
        assert np.all(np.diff(beta) > 0)

    def test_children_preserve_parent_mean(self) -> None:
        rng = np.random.default_rng(0)
        p1 = rng.uniform(-1, 1, (20, 4))
        p2 = rng.uniform(-1, 1, (20, 4))
        c1, c2 = sbx_crossover(p1, p2, 20.0, (-5.0, 5.0), rng)
        np.testing.assert_allclose(c1 + c2, p1 + p2, atol=1e-12)

    def test_no_crossover_copies_parents(self) -> None:
        rng = np.random.default_rng(1)
        p1 = rng.uniform(-1, 1, (5, 3))
        p2 = rng.uniform(-1, 1, (5, 3))
        c1, c2 = sbx_crossover(p1, p2, 20.0, (-5.0, 5.0), rng, probability=0.0)
        np.testing.assert_array_equal(c1, p1)
        np.testing.assert_array_equal(c2, p2)

    def test_children_clamped(self) -> None:
        rng = np.random.default_rng(2)
        p1 = np.full((50, 3), -4.9)
        p2 = np.full((50, 3), 4.9)
        c1, c2 = sbx_crossover(p1, p2, 0.0, (-5.0, 5.0), rng)
        assert np.all(np.abs(np.vstack((c1, c2))) <= 5.0)


class TestPolynomialMutation:
    """Tests for polynomial mutation"""

    def test_delta_range(self) -> None:
        delta = mutation_delta(np.linspace(0.0, 0.999, 100), 20.0)
        assert np.all(np.abs(delta) <= 1.0)
        assert mutation_delta(np.array([0.5]), 20.0)[0] == 0.0

    def test_rate_zero_is_identity(self) -> None:
        x = np.random.default_rng(3).uniform(-5, 5, (10, 4))
        np.testing.assert_array_equal(polynomial_mutation(x, 20.0, 0.0, (-5.0, 5.0), np.random.default_rng(4)), x)

    def test_rate_one_changes_and_clamps(self) -> None:
        x = np.full((10, 4), 4.99)
        y = polynomial_mutation(x, 1.0, 1.0, (-5.0, 5.0), np.random.default_rng(5))
        assert np.all(y <= 5.0)
        assert np.any(y != x)
