"""Solver base class, evaluation ledger and run records"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from qbench.analytic.front import DEFAULT_REFERENCE_OFFSET, nadir_utopian_reference
from qbench.core.config import SOLVER_NAMES, SolverConfig, TrajectoryMode
from qbench.core.exceptions import ValidationError
from qbench.indicators import hypervolume_2d, nondominated_filter
from qbench.problems.instance import Instance

logger = logging.getLogger(__name__)

DEFAULT_CHECKPOINT_COUNT = 20
FIRST_CHECKPOINT = 100


def checkpoint_schedule(
    budget: int, count: int = DEFAULT_CHECKPOINT_COUNT, start: int = FIRST_CHECKPOINT
) -> list[int]:
    """Log-spaced evaluation counts from ``start`` to ``budget``, rounded and deduplicated"""
    if budget < 1:
        raise ValidationError(f"Budget must be positive, got {budget}")
    if budget <= start:
        return [budget]
    values = np.unique(np.round(np.geomspace(start, budget, count)).astype(int))
    values[-1] = budget
    return [int(v) for v in values]


@dataclass
class RunRecord:
    """Trajectory of (evaluations, normalized hypervolume) of one solver run"""

    class_name: str
    dimension: int
    index: int
    solver: str
    seed: int
    mode: TrajectoryMode = "population"
    trajectory: list[tuple[int, float]] = field(default_factory=list)
    evaluations_used: int = 0
    covariance_resets: int = 0

    @property
    def final_hypervolume(self) -> float:
        return self.trajectory[-1][1] if self.trajectory else 0.0

    def rows(self) -> list[dict[str, Any]]:
        """One CSV row per checkpoint"""
        return [
            {
                "class_name": self.class_name,
                "dimension": self.dimension,
                "index": self.index,
                "solver": self.solver,
                "seed": self.seed,
                "evaluations": evaluations,
                "normalized_hv": hv,
                "mode": self.mode,
            }
            for evaluations, hv in self.trajectory
        ]


class Evaluator:
    """Counts objective evaluations and records checkpoint hypervolumes.

    ``record`` is called after every selection step with the current
    population's objective vectors; in archive mode the nondominated set of
    all evaluated points is measured instead.
    """

    def __init__(
        self,
        inst: Instance,
        budget: int,
        checkpoints: list[int] | None = None,
        mode: TrajectoryMode = "population",
        reference_offset: float = DEFAULT_REFERENCE_OFFSET,
    ):
        self.inst = inst
        self.budget = budget
        self.checkpoints = checkpoints or checkpoint_schedule(budget)
        self.mode = mode
        nadir, utopian, self.reference = nadir_utopian_reference(inst, reference_offset)
        self._area = float((nadir[0] - utopian[0]) * (nadir[1] - utopian[1]))
        self.count = 0
        self.archive = np.empty((0, 2))
        self.trajectory: list[tuple[int, float]] = []
        self.covariance_resets = 0
        self._next_checkpoint = 0

    @property
    def remaining(self) -> int:
        return self.budget - self.count

    @property
    def exhausted(self) -> bool:
        return self.count >= self.budget

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """Evaluate an (n, d) batch; every row costs one evaluation"""
        points = np.atleast_2d(points)
        if len(points) > self.remaining:
            raise ValidationError(
                f"Evaluating {len(points)} points exceeds the remaining budget {self.remaining}"
            )
        values = self.inst.evaluate_many(points)
        self.count += len(points)
        if self.mode == "archive":
            self.archive = nondominated_filter(np.vstack((self.archive, values)))
        return values

    def normalized_hypervolume(self, values: np.ndarray) -> float:
        return hypervolume_2d(values, self.reference) / self._area

    def record(self, population_values: np.ndarray) -> None:
        """Store the hypervolume for every checkpoint the counter has reached"""
        while (
            self._next_checkpoint < len(self.checkpoints)
            and self.checkpoints[self._next_checkpoint] <= self.count
        ):
            measured = self.archive if self.mode == "archive" else population_values
            hv = self.normalized_hypervolume(measured)
            self.trajectory.append((self.checkpoints[self._next_checkpoint], hv))
            self._next_checkpoint += 1


class BaseSolver(ABC):
    """Base class of the reference solvers"""

    name: str = ""

    def __init__(self, config: SolverConfig | None = None):
        self.config = config or SolverConfig()

    def run(self, inst: Instance, seed: int | None = None) -> RunRecord:
        """Optimize ``inst`` until the budget is spent.

        Args:
            inst: Instance treated as a black box
            seed: Generator seed, defaults to the configured seed

        Returns:
            Run record with the checkpoint trajectory
        """
        seed = self.config.seed if seed is None else seed
        rng = np.random.default_rng(seed)
        evaluator = Evaluator(
            inst,
            self.config.budget,
            self.config.checkpoints,
            self.config.trajectory_mode,
        )
        logger.debug("%s on %s d=%d index=%d seed=%d", self.name, inst.class_name, inst.dimension, inst.index, seed)
        self._optimize(inst, evaluator, rng)
        record = RunRecord(
            class_name=inst.class_name,
            dimension=inst.dimension,
            index=inst.index,
            solver=self.name,
            seed=seed,
            mode=self.config.trajectory_mode,
            trajectory=evaluator.trajectory,
            evaluations_used=evaluator.count,
            covariance_resets=evaluator.covariance_resets,
        )
        logger.debug("%s finished after %d evaluations (hv=%.6f)", self.name, evaluator.count, record.final_hypervolume)
        return record

    @abstractmethod
    def _optimize(self, inst: Instance, evaluator: Evaluator, rng: np.random.Generator) -> None:
        """Run the main loop, calling ``evaluator.record`` after every selection"""
        pass


class SolverFactory:
    """Solver factory"""

    @staticmethod
    def create(name: str, config: SolverConfig | None = None) -> BaseSolver:
        """Create a solver from its name (nsga2, sms-emoa, mo-cma-es)"""
        if name == "nsga2":
            from qbench.solvers.nsga2 import NSGA2

            return NSGA2(config)
        elif name == "sms-emoa":
            from qbench.solvers.sms_emoa import SMSEMOA

            return SMSEMOA(config)
        elif name == "mo-cma-es":
            from qbench.solvers.mo_cma_es import MOCMAES

            return MOCMAES(config)
        else:
            raise ValidationError(f"Unknown solver: {name}; available: {list(SOLVER_NAMES)}")
