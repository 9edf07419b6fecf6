"""Seeded SplitMix64 stream.

numpy's ``Generator`` methods may change their output between releases, and
the starting points drawn here decide the greedy algorithms' results, so the
generator is pinned: SplitMix64 (Steele, Lea & Flood 2014) with rejection
sampling for bounded integers.  Pure Python integer arithmetic, identical on
every platform.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

DEFAULT_SEED = 20180123


class RandomSource:
    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = int(seed) & _MASK64
        self._state = self.seed

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform_index(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n < 1:
            raise ValueError(f"uniform_index needs n >= 1, got {n}")
        # reject the top partial block so every residue is equally likely
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def uniform(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bit(self) -> int:
        return self.next_u64() >> 63

    def distinct_indices(self, n: int, k: int) -> list[int]:
        """``k`` distinct indices from ``[0, n)``, k <= n (partial Fisher-Yates)."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct indices from {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.uniform_index(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
