"""White-box oracles: Pareto set, front, reference point and mu-distributions"""

from qbench.analytic.front import (
    FrontParam,
    distance_to_front,
    distance_to_pareto_set,
    front_point,
    nadir_utopian_reference,
    pareto_set_point,
    t_from_weight,
    weight_from_t,
    weight_to_point,
)
from qbench.analytic.mu import MuDistribution, optimal_mu_distribution

__all__ = [
    "FrontParam",
    "MuDistribution",
    "distance_to_front",
    "distance_to_pareto_set",
    "front_point",
    "nadir_utopian_reference",
    "optimal_mu_distribution",
    "pareto_set_point",
    "t_from_weight",
    "weight_from_t",
    "weight_to_point",
]
