"""Experiment pipeline - solver runs over classes, instances and solvers"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from qbench.analytic.mu import optimal_mu_distribution
from qbench.core.config import ExperimentSpec, SolverConfig
from qbench.problems.classes import ProblemClass
from qbench.problems.generator import sample_instance
from qbench.rng import fnv1a_32
from qbench.services.cache import MuDistributionCache
from qbench.services.records import MU_FILE, RUNS_FILE, write_mu_distributions, write_runs
from qbench.solvers.base import RunRecord, SolverFactory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunTask:
    """One (class, index, solver) cell of an experiment"""

    class_name: str
    dimension: int
    index: int
    solver: str
    seed: int
    kappa: float
    spectrum: str
    solver_config: SolverConfig


@dataclass
class ExperimentResult:
    records: list[RunRecord]
    mu_distributions: list[dict[str, Any]] = field(default_factory=list)
    runs_path: Path | None = None
    mu_path: Path | None = None


def run_seed(class_name: str, dimension: int, index: int, solver: str, base_seed: int) -> int:
    """Seed of one run, a function of the cell and the experiment seed only"""
    return fnv1a_32(f"{class_name}:{dimension}:{index}:{solver}:{base_seed}")


def execute_task(task: RunTask) -> RunRecord:
    """Generate the instance and run one solver; executed in a worker process"""
    problem_class = ProblemClass.from_name(task.class_name, task.dimension, task.kappa, task.spectrum)
    inst = sample_instance(problem_class, task.index)
    solver = SolverFactory.create(task.solver, task.solver_config)
    return solver.run(inst, seed=task.seed)


class ExperimentPipeline:
    """Run the Cartesian product of an ExperimentSpec and persist the records"""

    def __init__(self, spec: ExperimentSpec, cache: MuDistributionCache | None = None):
        self.spec = spec
        self.cache = cache

    def build_tasks(self) -> list[RunTask]:
        """Tasks in (class, index, solver) order"""
        spec = self.spec
        config = spec.resolved_solver_config()
        return [
            RunTask(
                class_name=class_name,
                dimension=spec.dimension,
                index=index,
                solver=solver,
                seed=run_seed(class_name, spec.dimension, index, solver, spec.seed),
                kappa=spec.kappa,
                spectrum=spec.spectrum,
                solver_config=config,
            )
            for class_name in spec.class_names
            for index in spec.indices
            for solver in spec.solvers
        ]

    def optimal_targets(self) -> list[dict[str, Any]]:
        """Optimal mu-distribution per (class, index); also validates every instance before any run"""
        spec = self.spec
        mu = spec.solver_config.population_size
        entries = []
        for class_name in spec.class_names:
            problem_class = ProblemClass.from_name(class_name, spec.dimension, spec.kappa, spec.spectrum)
            for index in spec.indices:
                inst = sample_instance(problem_class, index)
                if self.cache is not None:
                    distribution = self.cache.get_or_compute(inst, mu)
                else:
                    distribution = optimal_mu_distribution(inst, mu)
                entries.append(distribution.to_record(inst))
        return entries

    async def run(self, write: bool = True) -> ExperimentResult:
        """Execute every run and write runs.csv and mu_distributions.json.

        Rows come out in (class, index, solver) order whatever the completion order.
        """
        spec = self.spec
        targets = self.optimal_targets()
        tasks = self.build_tasks()
        logger.info(
            "Scheduling %d runs (%d classes x %d instances x %d solvers) on %d worker(s)",
            len(tasks),
            len(spec.class_names),
            len(spec.indices),
            len(spec.solvers),
            spec.workers,
        )

        if spec.workers == 1:
            records = [execute_task(task) for task in tasks]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=spec.workers) as pool:
                records = list(
                    await asyncio.gather(*(loop.run_in_executor(pool, execute_task, task) for task in tasks))
                )

        resets = sum(record.covariance_resets for record in records)
        if resets:
            logger.warning("%d covariance reset(s) across the experiment", resets)
        logger.info("Finished %d runs", len(records))

        result = ExperimentResult(records=records, mu_distributions=targets)
        if write:
            result.runs_path = write_runs(records, Path(spec.output_dir) / RUNS_FILE)
            result.mu_path = write_mu_distributions(targets, Path(spec.output_dir) / MU_FILE)
            logger.info("Wrote %s and %s", result.runs_path, result.mu_path)
        return result
