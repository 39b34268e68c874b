"""Self-owned seeded shuffle so cross-validation folds never depend on a
random-library version: SplitMix64 driving an in-place Fisher-Yates pass.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic 64-bit generator (public-domain constants)."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via Lemire multiply-shift with
        rejection of the biased low range."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound  # == (2**64 - bound) % bound
        while True:
            x = self.next_u64()
            m = x * bound
            if (m & _MASK) >= threshold:
                return m >> 64


def shuffled_indices(n: int, seed: int) -> list[int]:
    """Fisher-Yates permutation of range(n), fully determined by seed."""
    rng = SplitMix64(seed)
    idx = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx
