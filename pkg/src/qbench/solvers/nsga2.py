"""NSGA-II: generational (mu + mu) selection by rank and crowding distance"""

import numpy as np

from qbench.core.config import SolverConfig
from qbench.problems.instance import Instance
from qbench.solvers.base import BaseSolver, Evaluator
from qbench.solvers.operators import polynomial_mutation, sbx_crossover
from qbench.solvers.ranking import binary_tournament, crowding_distance, fast_nondominated_sort


def rank_and_crowding(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ranks = np.empty(len(values), dtype=int)
    crowding = np.empty(len(values))
    for rank, front in enumerate(fast_nondominated_sort(values)):
        ranks[front] = rank
        crowding[front] = crowding_distance(values[front])
    return ranks, crowding


def crowded_selection(values: np.ndarray, keep: int) -> np.ndarray:
    """Survivor indices: whole fronts, then the least crowded of the critical front"""
    survivors: list[int] = []
    for front in fast_nondominated_sort(values):
        free = keep - len(survivors)
        if len(front) <= free:
            survivors.extend(front.tolist())
        else:
            crowding = crowding_distance(values[front])
            order = np.argsort(-crowding, kind="stable")
            survivors.extend(front[order[:free]].tolist())
        if len(survivors) == keep:
            break
    return np.array(survivors, dtype=int)


def make_offspring(
    x: np.ndarray,
    ranks: np.ndarray,
    crowding: np.ndarray,
    count: int,
    config: SolverConfig,
    rng: np.random.Generator,
) -> np.ndarray:
    """Tournament selection, SBX and polynomial mutation producing ``count`` children"""
    pairs = (count + 1) // 2
    parents = binary_tournament(ranks, crowding, 2 * pairs, rng)
    c1, c2 = sbx_crossover(
        x[parents[0::2]],
        x[parents[1::2]],
        config.crossover_eta,
        config.bounds,
        rng,
        config.crossover_probability,
    )
    children = np.empty((2 * pairs, x.shape[1]))
    children[0::2] = c1
    children[1::2] = c2
    return polynomial_mutation(
        children[:count],
        config.mutation_eta,
        config.mutation_rate_for(x.shape[1]),
        config.bounds,
        rng,
    )


class NSGA2(BaseSolver):
    """Non-dominated sorting genetic algorithm II"""

    name = "nsga2"

    def _optimize(self, inst: Instance, evaluator: Evaluator, rng: np.random.Generator) -> None:
        cfg = self.config
        mu = cfg.population_size
        lower, upper = cfg.bounds

        x = rng.uniform(lower, upper, size=(mu, inst.dimension))
        f = evaluator(x)
        evaluator.record(f)

        while not evaluator.exhausted:
            ranks, crowding = rank_and_crowding(f)
            children = make_offspring(x, ranks, crowding, min(mu, evaluator.remaining), cfg, rng)
            f_children = evaluator(children)

            pool_x = np.vstack((x, children))
            pool_f = np.vstack((f, f_children))
            survivors = crowded_selection(pool_f, mu)
            x, f = pool_x[survivors], pool_f[survivors]
            evaluator.record(f)
