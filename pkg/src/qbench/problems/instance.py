"""Problem instance: parameters, derived quantities, objective and gradient"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from qbench.core.exceptions import DomainError, ValidationError
from qbench.problems.classes import ProblemClass


@dataclass(frozen=True, eq=False)
class Instance:
    """Evaluatable pair f_i(x) = a_i/2 [(x - x_i*)^T U_i D_i U_i^T (x - x_i*)]^(s/2) + b_i

    Values are immutable after construction; arrays must not be mutated.
    """

    problem_class: ProblemClass
    index: int
    u1: np.ndarray
    u2: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    x1_star: np.ndarray
    x2_star: np.ndarray
    a1: float
    a2: float
    b1: float
    b2: float
    s: float
    g_weight: float

    @property
    def class_name(self) -> str:
        return self.problem_class.name

    @property
    def dimension(self) -> int:
        return self.problem_class.dimension

    @cached_property
    def h1(self) -> np.ndarray:
        return hessian(self.u1, self.d1)

    @cached_property
    def h2(self) -> np.ndarray:
        return hessian(self.u2, self.d2)

    @cached_property
    def delta(self) -> np.ndarray:
        return self.x2_star - self.x1_star

    def _check_point(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ValidationError(
                f"Point has shape {x.shape}, expected ({self.dimension},)"
            )
        if not np.all(np.isfinite(x)):
            raise ValidationError("Point has non-finite entries")
        return x

    def quadratic_forms(self, x: np.ndarray) -> tuple[float, float]:
        """(x - x_i*)^T H_i (x - x_i*) for both objectives"""
        x = self._check_point(x)
        return (
            _quadratic_form(self.u1, self.d1, x - self.x1_star),
            _quadratic_form(self.u2, self.d2, x - self.x2_star),
        )

    def evaluate(self, x: np.ndarray) -> tuple[float, float]:
        q1, q2 = self.quadratic_forms(x)
        half = self.s / 2.0
        return (
            0.5 * self.a1 * q1**half + self.b1,
            0.5 * self.a2 * q2**half + self.b2,
        )

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Row-wise evaluation of an (n, d) batch into an (n, 2) array"""
        points = np.asarray(points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self.dimension:
            raise ValidationError(
                f"Batch has shape {points.shape}, expected (n, {self.dimension})"
            )
        half = self.s / 2.0
        q1 = (((points - self.x1_star) @ self.u1) ** 2 * self.d1).sum(axis=1)
        q2 = (((points - self.x2_star) @ self.u2) ** 2 * self.d2).sum(axis=1)
        return np.column_stack(
            (0.5 * self.a1 * q1**half + self.b1, 0.5 * self.a2 * q2**half + self.b2)
        )

    def gradient(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Gradients (a_i s/2) q_i^(s/2 - 1) H_i (x - x_i*).

        Raises DomainError at an objective's own optimum when s < 2.
        """
        x = self._check_point(x)
        grads = []
        for a, h, x_star, (u, d) in (
            (self.a1, self.h1, self.x1_star, (self.u1, self.d1)),
            (self.a2, self.h2, self.x2_star, (self.u2, self.d2)),
        ):
            diff = x - x_star
            if self.s == 2.0:
                grads.append(a * (h @ diff))
                continue
            q = _quadratic_form(u, d, diff)
            if q == 0.0:
                raise DomainError(f"Gradient does not exist at the optimum for s = {self.s}")
            grads.append(a * self.s / 2.0 * q ** (self.s / 2.0 - 1.0) * (h @ diff))
        return grads[0], grads[1]


def hessian(u: np.ndarray, d: np.ndarray) -> np.ndarray:
    h = (u * d) @ u.T
    return 0.5 * (h + h.T)


def _quadratic_form(u: np.ndarray, d: np.ndarray, diff: np.ndarray) -> float:
    y = diff @ u
    return float(np.dot(y * y, d))
