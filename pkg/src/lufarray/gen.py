"""Word generators: the binary worst-case family and seeded random words.

Random words use numpy's PCG64 bit generator:
``numpy.random.Generator(PCG64(seed)).integers(1, sigma + 1, size=n)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Word, rank_reduce


def worstcase_text(t: int) -> str:
    if t < 2:
        raise ValueError(f"block count t must be at least 2, got {t}")
    w, block = "", "a"
    for _ in range(t - 1):
        w = w + block + w
        block += "b"
    w += block
    return w + w


def gen_worstcase(t: int) -> Word:
    """Binary word forcing many positions onto ``t`` stacks; length ``2 (2**t - 1)``."""
    return rank_reduce(worstcase_text(t))


def worstcase_length(t: int) -> int:
    # half-length obeys x_i = 2 x_{i-1} + i, x_0 = 0, then gains the final block of length t
    return 2 * (2 ** t - 1)


def gen_random(n: int, sigma: int, seed: int) -> Word:
    if sigma < 1:
        raise ValueError("sigma must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.Generator(np.random.PCG64(seed))
    symbols = rng.integers(1, sigma + 1, size=n, dtype=np.int64)
    # ranks must stay dense when some letters are missing
    return rank_reduce(symbols) if n else Word([])


@dataclass(frozen=True)
class GenSpec:
    kind: str  # "worstcase" or "random"
    t: int = 0
    n: int = 0
    sigma: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.kind == "worstcase" and self.t < 2:
            raise ValueError("worstcase needs t >= 2")
        if self.kind == "random" and (self.sigma < 1 or self.n < 0):
            raise ValueError("random needs sigma >= 1 and n >= 0")
        if self.kind not in ("worstcase", "random"):
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def build(self) -> Word:
        if self.kind == "worstcase":
            return gen_worstcase(self.t)
        return gen_random(self.n, self.sigma, self.seed)

    def describe(self) -> str:
        if self.kind == "worstcase":
            return f"worstcase:t={self.t}"
        return f"random:n={self.n}:sigma={self.sigma}:seed={self.seed}"
