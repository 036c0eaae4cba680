"""qbench - convex-quadratic bi-objective benchmark problems with analytic oracles"""

__version__ = "0.1.0"
