"""Nondominated sorting, crowding distance and tournament selection"""

import numpy as np

from qbench.indicators import hypervolume_contributions


def dominance_matrix(values: np.ndarray) -> np.ndarray:
    """dom[i, j] is True when point i dominates point j"""
    f = np.asarray(values, dtype=float)
    leq = np.all(f[:, None, :] <= f[None, :, :], axis=2)
    lt = np.any(f[:, None, :] < f[None, :, :], axis=2)
    return leq & lt


def fast_nondominated_sort(values: np.ndarray) -> list[np.ndarray]:
    """Index arrays of the fronts by dominance depth, best first"""
    dom = dominance_matrix(values)
    dominated_by = dom.sum(axis=0)
    remaining = np.ones(len(dom), dtype=bool)
    fronts = []
    while remaining.any():
        front = np.flatnonzero(remaining & (dominated_by == 0))
        fronts.append(front)
        remaining[front] = False
        dominated_by = dominated_by - dom[front].sum(axis=0)
    return fronts


def nondominated_ranks(values: np.ndarray) -> np.ndarray:
    ranks = np.empty(len(values), dtype=int)
    for rank, front in enumerate(fast_nondominated_sort(values)):
        ranks[front] = rank
    return ranks


def crowding_distance(front_values: np.ndarray) -> np.ndarray:
    """Crowding distance of a nondominated front; boundary points get inf"""
    f = np.asarray(front_values, dtype=float)
    n = len(f)
    distance = np.zeros(n)
    if n <= 2:
        return np.full(n, np.inf)
    for m in range(f.shape[1]):
        order = np.argsort(f[:, m], kind="stable")
        span = f[order[-1], m] - f[order[0], m]
        distance[order[0]] = np.inf
        distance[order[-1]] = np.inf
        if span > 0:
            distance[order[1:-1]] += (f[order[2:], m] - f[order[:-2], m]) / span
    return distance


def binary_tournament(
    ranks: np.ndarray, crowding: np.ndarray, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Winners of ``count`` tournaments on (lower rank, larger crowding)"""
    pairs = rng.integers(0, len(ranks), size=(count, 2))
    a, b = pairs[:, 0], pairs[:, 1]
    b_wins = (ranks[b] < ranks[a]) | ((ranks[b] == ranks[a]) & (crowding[b] > crowding[a]))
    return np.where(b_wins, b, a)


def selection_reference(values: np.ndarray) -> np.ndarray:
    """Componentwise maximum plus one"""
    return np.max(values, axis=0) + 1.0


def boundary_mask(front_values: np.ndarray) -> np.ndarray:
    """True for the points of a nondominated front with the smallest f1 or the smallest f2"""
    f = np.asarray(front_values, dtype=float)
    mask = np.zeros(len(f), dtype=bool)
    if len(f):
        mask[np.argmin(f[:, 0])] = True
        mask[np.argmin(f[:, 1])] = True
    return mask


def _least_contributor(front_values: np.ndarray, reference: np.ndarray) -> int:
    # boundary points go only when nothing else is left
    raw = hypervolume_contributions(front_values, reference)
    protected = boundary_mask(front_values)
    candidates = np.flatnonzero(~protected) if not protected.all() else np.arange(len(raw))
    return int(candidates[np.argmin(raw[candidates])])


def hypervolume_order(values: np.ndarray, reference: np.ndarray | None = None) -> np.ndarray:
    """Indices sorted best first by (rank, boundary points, larger contribution within the front)"""
    values = np.asarray(values, dtype=float)
    reference = selection_reference(values) if reference is None else reference
    order = []
    for front in fast_nondominated_sort(values):
        front_values = values[front]
        raw = hypervolume_contributions(front_values, reference)
        protected = boundary_mask(front_values)
        order.extend(front[np.lexsort((-raw, ~protected))].tolist())
    return np.array(order, dtype=int)


def reduce_by_contribution(
    values: np.ndarray, keep: int, reference: np.ndarray | None = None
) -> np.ndarray:
    """Indices of ``keep`` survivors: whole fronts first, then the critical
    front is thinned by repeatedly removing its least contributing interior point"""
    values = np.asarray(values, dtype=float)
    reference = selection_reference(values) if reference is None else reference
    survivors: list[int] = []
    for front in fast_nondominated_sort(values):
        if len(survivors) + len(front) <= keep:
            survivors.extend(front.tolist())
            if len(survivors) == keep:
                break
            continue
        critical = list(front)
        while len(survivors) + len(critical) > keep:
            critical.pop(_least_contributor(values[critical], reference))
        survivors.extend(critical)
        break
    return np.array(survivors, dtype=int)
