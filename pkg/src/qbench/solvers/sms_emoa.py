"""SMS-EMOA: steady-state (mu + 1) selection by hypervolume contribution"""

import numpy as np

from qbench.problems.instance import Instance
from qbench.solvers.base import BaseSolver, Evaluator
from qbench.solvers.nsga2 import make_offspring, rank_and_crowding
from qbench.solvers.ranking import reduce_by_contribution


class SMSEMOA(BaseSolver):
    """S-metric selection evolutionary multi-objective algorithm.

    Each step creates one offspring and drops the interior member of the worst
    front whose hypervolume contribution is smallest, measured against the
    componentwise maximum of the mu + 1 points plus one. The two extremes of
    that front stay.
    """

    name = "sms-emoa"

    def _optimize(self, inst: Instance, evaluator: Evaluator, rng: np.random.Generator) -> None:
        cfg = self.config
        mu = cfg.population_size
        lower, upper = cfg.bounds

        x = rng.uniform(lower, upper, size=(mu, inst.dimension))
        f = evaluator(x)
        evaluator.record(f)

        while not evaluator.exhausted:
            ranks, crowding = rank_and_crowding(f)
            child = make_offspring(x, ranks, crowding, 1, cfg, rng)
            f_child = evaluator(child)

            pool_x = np.vstack((x, child))
            pool_f = np.vstack((f, f_child))
            survivors = np.sort(reduce_by_contribution(pool_f, mu))
            x, f = pool_x[survivors], pool_f[survivors]
            evaluator.record(f)
