"""
Seeded linear congruential generator.

Used wherever imgkit needs reproducible pseudo-random choices (the BRIEF
sampling table, RANSAC minimal samples) so outputs are bit-identical across
platforms and numpy versions.
"""

from typing import List

_MULTIPLIER = 1103515245
_INCREMENT = 12345
_MODULUS = 2 ** 31


class Lcg:
    def __init__(self, seed: int):
        self.state = seed % _MODULUS

    def next(self) -> int:
        """Advance the state and return it."""
        self.state = (_MULTIPLIER * self.state + _INCREMENT) % _MODULUS
        return self.state

    def randrange(self, n: int) -> int:
        return self.next() % n

    def sample(self, n: int, k: int) -> List[int]:
        """Draw k distinct indices from range(n) by partial Fisher-Yates."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct values from {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.randrange(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
