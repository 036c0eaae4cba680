"""Reference solvers"""

from qbench.solvers.base import BaseSolver, Evaluator, RunRecord, SolverFactory, checkpoint_schedule
from qbench.solvers.mo_cma_es import MOCMAES
from qbench.solvers.nsga2 import NSGA2
from qbench.solvers.sms_emoa import SMSEMOA

__all__ = [
    "BaseSolver",
    "Evaluator",
    "MOCMAES",
    "NSGA2",
    "RunRecord",
    "SMSEMOA",
    "SolverFactory",
    "checkpoint_schedule",
]
