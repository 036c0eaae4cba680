"""mu-distribution caching with diskcache"""

import logging
from pathlib import Path
from typing import Any

from diskcache import Cache

from qbench.analytic.front import DEFAULT_REFERENCE_OFFSET
from qbench.analytic.mu import MuDistribution, optimal_t_values, scale_solution
from qbench.problems.instance import Instance

logger = logging.getLogger(__name__)


class MuDistributionCache:
    """Persistent cache of optimal mu-distributions.

    Normalized t-values depend on the front power, mu and the reference
    offset only, so one entry serves every instance of a shape. Entries
    survive process restarts.
    """

    def __init__(self, cache_dir: str | Path = ".cache/qbench"):
        """Open (and create) the cache directory

        Args:
            cache_dir: Directory of the diskcache store
        """
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

        self.cache = Cache(str(self.cache_dir))

    @staticmethod
    def _generate_cache_key(s: float, mu: int, reference_offset: float) -> str:
        return f"mu|s:{s!r}|mu:{mu}|offset:{reference_offset!r}"

    def get(
        self, inst: Instance, mu: int, reference_offset: float = DEFAULT_REFERENCE_OFFSET
    ) -> MuDistribution | None:
        """Cached distribution scaled to ``inst``, or None"""
        cached = self.cache.get(self._generate_cache_key(inst.s, mu, reference_offset))
        if cached is None:
            return None
        return scale_solution(inst, mu, reference_offset, cached)

    def get_or_compute(
        self, inst: Instance, mu: int, reference_offset: float = DEFAULT_REFERENCE_OFFSET
    ) -> MuDistribution:
        """Cached distribution, computing and storing it on a miss"""
        key = self._generate_cache_key(inst.s, mu, reference_offset)
        solution = self.cache.get(key)
        if solution is None:
            logger.debug("mu-distribution cache miss: %s", key)
            solution = optimal_t_values(inst.s, mu, reference_offset)
            self.cache.set(key, solution)
        return scale_solution(inst, mu, reference_offset, solution)

    def clear(self) -> None:
        self.cache.clear()

    def get_stats(self) -> dict[str, Any]:
        """Entry count, volume and directory of the store"""
        return {
            "size": len(self.cache),
            "volume": self.cache.volume(),
            "directory": str(self.cache_dir),
        }

    def close(self) -> None:
        self.cache.close()
