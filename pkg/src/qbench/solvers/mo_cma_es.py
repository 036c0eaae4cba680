"""MO-CMA-ES with individual-based success and hypervolume-based selection.

Every individual carries its own (1+1)-CMA-ES strategy: step size sigma,
covariance C with Cholesky factor A, evolution path p_c and smoothed success
rate p_succ. Each generation every parent creates one offspring; the 2 mu
pool is ordered by (nondominated rank, front extremes, larger hypervolume
contribution) and an offspring counts as successful when it precedes its
parent.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from qbench.core.exceptions import NotPositiveDefiniteError, ValidationError
from qbench.linalg import cholesky
from qbench.problems.instance import Instance
from qbench.solvers.base import BaseSolver, Evaluator
from qbench.solvers.ranking import hypervolume_order, reduce_by_contribution, selection_reference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrategyParameters:
    """Constants of the (1+1) success rule and the rank-one covariance update"""

    target_success: float
    success_smoothing: float
    damping: float
    path_rate: float
    covariance_rate: float
    success_threshold: float

    @classmethod
    def for_dimension(
        cls, d: int, target_success: float = 1 / 5.5, success_threshold: float = 0.44
    ) -> "StrategyParameters":
        return cls(
            target_success=target_success,
            success_smoothing=target_success / (2.0 + target_success),
            damping=1.0 + d / 2.0,
            path_rate=2.0 / (d + 2.0),
            covariance_rate=2.0 / (d**2 + 6.0),
            success_threshold=success_threshold,
        )


def update_step_size(
    sigma: float, p_succ: float, success: bool, params: StrategyParameters
) -> tuple[float, float]:
    """Smoothed success rule: returns the new (sigma, p_succ)"""
    p_succ = (1.0 - params.success_smoothing) * p_succ + params.success_smoothing * float(success)
    sigma *= math.exp(
        (p_succ - params.target_success) / (params.damping * (1.0 - params.target_success))
    )
    return sigma, p_succ


def update_covariance(
    cov: np.ndarray, path: np.ndarray, step: np.ndarray, p_succ: float, params: StrategyParameters
) -> tuple[np.ndarray, np.ndarray]:
    """Rank-one update with the normalized step (x' - x) / sigma; returns (C, p_c)"""
    cc = params.path_rate
    ccov = params.covariance_rate
    if p_succ < params.success_threshold:
        path = (1.0 - cc) * path + math.sqrt(cc * (2.0 - cc)) * step
        cov = (1.0 - ccov) * cov + ccov * np.outer(path, path)
    else:
        path = (1.0 - cc) * path
        cov = (1.0 - ccov) * cov + ccov * (np.outer(path, path) + cc * (2.0 - cc) * cov)
    return cov, path


@dataclass
class StrategyPopulation:
    """Arrays of per-individual search state"""

    x: np.ndarray
    f: np.ndarray
    sigma: np.ndarray
    p_succ: np.ndarray
    path: np.ndarray
    cov: np.ndarray
    factor: np.ndarray

    def take(self, indices: np.ndarray) -> "StrategyPopulation":
        return StrategyPopulation(
            x=self.x[indices],
            f=self.f[indices],
            sigma=self.sigma[indices],
            p_succ=self.p_succ[indices],
            path=self.path[indices],
            cov=self.cov[indices],
            factor=self.factor[indices],
        )

    @staticmethod
    def concatenate(a: "StrategyPopulation", b: "StrategyPopulation") -> "StrategyPopulation":
        return StrategyPopulation(
            x=np.concatenate((a.x, b.x)),
            f=np.concatenate((a.f, b.f)),
            sigma=np.concatenate((a.sigma, b.sigma)),
            p_succ=np.concatenate((a.p_succ, b.p_succ)),
            path=np.concatenate((a.path, b.path)),
            cov=np.concatenate((a.cov, b.cov)),
            factor=np.concatenate((a.factor, b.factor)),
        )


class MOCMAES(BaseSolver):
    """Multi-objective covariance matrix adaptation evolution strategy"""

    name = "mo-cma-es"

    def _optimize(self, inst: Instance, evaluator: Evaluator, rng: np.random.Generator) -> None:
        cfg = self.config
        mu = cfg.population_size
        d = inst.dimension
        params = StrategyParameters.for_dimension(d, cfg.target_success, cfg.success_threshold)
        sigma0 = cfg.initial_step_size

        x = sigma0 * rng.standard_normal((mu, d))
        parents = StrategyPopulation(
            x=x,
            f=evaluator(x),
            sigma=np.full(mu, sigma0),
            p_succ=np.full(mu, params.target_success),
            path=np.zeros((mu, d)),
            cov=np.tile(np.eye(d), (mu, 1, 1)),
            factor=np.tile(np.eye(d), (mu, 1, 1)),
        )
        parents = parents.take(hypervolume_order(parents.f))
        evaluator.record(parents.f)

        while not evaluator.exhausted:
            # parents are kept in selection order; with a short budget the best breed
            count = min(mu, evaluator.remaining)
            z = rng.standard_normal((count, d))
            steps = np.einsum("kij,kj->ki", parents.factor[:count], z)
            x_new = parents.x[:count] + parents.sigma[:count, None] * steps
            offspring = parents.take(np.arange(count))
            offspring.x = x_new
            offspring.f = evaluator(x_new)

            pool = StrategyPopulation.concatenate(parents, offspring)
            reference = selection_reference(pool.f)
            position = np.empty(len(pool.f), dtype=int)
            position[hypervolume_order(pool.f, reference)] = np.arange(len(pool.f))

            for k in range(count):
                child = mu + k
                success = bool(position[child] < position[k])
                sigma_old = pool.sigma[k]
                pool.sigma[k], pool.p_succ[k] = update_step_size(
                    sigma_old, pool.p_succ[k], success, params
                )
                pool.sigma[child], pool.p_succ[child] = pool.sigma[k], pool.p_succ[k]
                if success:
                    self._adapt_covariance(pool, child, steps[k], params, evaluator)

            survivors = reduce_by_contribution(pool.f, mu, reference)
            parents = pool.take(survivors)
            parents = parents.take(hypervolume_order(parents.f))
            evaluator.record(parents.f)

    @staticmethod
    def _adapt_covariance(
        pool: StrategyPopulation,
        index: int,
        step: np.ndarray,
        params: StrategyParameters,
        evaluator: Evaluator,
    ) -> None:
        cov, path = update_covariance(pool.cov[index], pool.path[index], step, pool.p_succ[index], params)
        try:
            factor = cholesky(cov)
        except (NotPositiveDefiniteError, ValidationError):
            evaluator.covariance_resets += 1
            logger.warning("Covariance lost positive definiteness; resetting to identity")
            d = len(step)
            cov, path, factor = np.eye(d), np.zeros(d), np.eye(d)
        pool.cov[index] = cov
        pool.path[index] = path
        pool.factor[index] = factor
