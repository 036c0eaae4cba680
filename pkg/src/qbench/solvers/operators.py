"""Real-coded variation: simulated binary crossover and polynomial mutation"""

import numpy as np


def spread_factor(u: np.ndarray, eta: float) -> np.ndarray:
    """SBX spread factor beta for uniform draws u in [0, 1)"""
    u = np.asarray(u, dtype=float)
    exponent = 1.0 / (eta + 1.0)
    low = u <= 0.5
    beta = np.empty_like(u)
    beta[low] = (2.0 * u[low]) ** exponent
    beta[~low] = (1.0 / (2.0 * (1.0 - u[~low]))) ** exponent
    return beta


def mutation_delta(u: np.ndarray, eta: float) -> np.ndarray:
    """Polynomial mutation perturbation in [-1, 1] relative to the box width"""
    u = np.asarray(u, dtype=float)
    exponent = 1.0 / (eta + 1.0)
    low = u < 0.5
    delta = np.empty_like(u)
    delta[low] = (2.0 * u[low]) ** exponent - 1.0
    delta[~low] = 1.0 - (2.0 * (1.0 - u[~low])) ** exponent
    return delta


def sbx_crossover(
    parent1: np.ndarray,
    parent2: np.ndarray,
    eta: float,
    bounds: tuple[float, float],
    rng: np.random.Generator,
    probability: float = 1.0,
) -> tuple[np.ndarray, np.ndarray]:
    """Two children per parent pair, clamped to the box.

    Parents are (d,) vectors or (n, d) batches of pairs; pairs not selected
    for crossover (with ``1 - probability``) are copied.
    """
    p1 = np.asarray(parent1, dtype=float)
    p2 = np.asarray(parent2, dtype=float)
    beta = spread_factor(rng.random(p1.shape), eta)
    crossed = rng.random(p1.shape[:-1] + (1,)) < probability
    beta = np.where(crossed, beta, 1.0)
    c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2)
    c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)
    lower, upper = bounds
    return np.clip(c1, lower, upper), np.clip(c2, lower, upper)


def polynomial_mutation(
    x: np.ndarray,
    eta: float,
    rate: float,
    bounds: tuple[float, float],
    rng: np.random.Generator,
) -> np.ndarray:
    """Mutate each coordinate with probability ``rate`` and clamp to the box"""
    x = np.asarray(x, dtype=float)
    lower, upper = bounds
    mask = rng.random(x.shape) < rate
    step = mutation_delta(rng.random(x.shape), eta) * (upper - lower)
    return np.clip(np.where(mask, x + step, x), lower, upper)
