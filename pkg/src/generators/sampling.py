"""Random sampling helpers shared by the generators."""
from typing import List

import numpy as np

from src.utils.errors import GeneratorError


def make_rng(seed: int, streams: int = 1) -> List[np.random.Generator]:
    """Independent PCG64 streams derived from one 64-bit seed."""
    children = np.random.SeedSequence(int(seed)).spawn(streams)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


class WeightTree:
    """Fenwick tree over non-negative weights with O(log n) draws and updates."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._tree = [0.0] * (capacity + 1)
        self._weights = [0.0] * capacity
        self._top = 1 << (capacity.bit_length() - 1) if capacity else 0

    @property
    def total(self) -> float:
        s = 0.0
        i = self.capacity
        while i > 0:
            s += self._tree[i]
            i -= i & -i
        return s

    def weight(self, i: int) -> float:
        return self._weights[i]

    def set(self, i: int, w: float) -> None:
        delta = w - self._weights[i]
        self._weights[i] = w
        j = i + 1
        while j <= self.capacity:
            self._tree[j] += delta
            j += j & -j

    def sample(self, rng: np.random.Generator) -> int:
        """Index drawn with probability weight / total."""
        total = self.total
        if total <= 0.0:
            raise GeneratorError("No positive weight left to sample from")
        while True:
            target = rng.random() * total
            pos = 0
            step = self._top
            while step:
                nxt = pos + step
                if nxt <= self.capacity and self._tree[nxt] <= target:
                    pos = nxt
                    target -= self._tree[nxt]
                step >>= 1
            # float drift can land on a zero-weight slot at a boundary
            if pos < self.capacity and self._weights[pos] > 0.0:
                return pos

    def sample_distinct(self, k: int, rng: np.random.Generator) -> List[int]:
        """k distinct indices, sequentially without replacement (renormalizing after each pick)."""
        chosen: List[int] = []
        saved: List[float] = []
        try:
            for _ in range(k):
                i = self.sample(rng)
                chosen.append(i)
                saved.append(self._weights[i])
                self.set(i, 0.0)
        finally:
            for i, w in zip(chosen, saved):
                self.set(i, w)
        return chosen


def sample_power_law_degrees(rng: np.random.Generator, size: int, exponent: float,
                             k_min: int = 1, k_max: int = 10_000) -> np.ndarray:
    """Inverse-CDF draws from P(k) ∝ k^-exponent truncated to [k_min, k_max]."""
    if exponent <= 1.0:
        raise GeneratorError(f"Power-law exponent must exceed 1, got {exponent}")
    if not 1 <= k_min <= k_max:
        raise GeneratorError(f"Need 1 <= k_min <= k_max, got [{k_min}, {k_max}]")
    support = np.arange(k_min, k_max + 1, dtype=np.float64)
    cdf = np.cumsum(support ** -exponent)
    cdf /= cdf[-1]
    picks = np.searchsorted(cdf, rng.random(size), side="right")
    return np.minimum(picks, support.size - 1).astype(np.int64) + k_min
