"""Services: run-record files, aggregation and the mu-distribution cache"""

from qbench.services.aggregate import aggregate
from qbench.services.cache import MuDistributionCache
from qbench.services.records import read_runs, write_mu_distributions, write_runs

__all__ = [
    "MuDistributionCache",
    "aggregate",
    "read_runs",
    "write_mu_distributions",
    "write_runs",
]
