"""Word representation and alphabet rank reduction.

Positions are 0-based inside the library. Anything printed for humans
(CLI tables, JSON) is converted to 1-based at the edge.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class Word:
    """An immutable, rank-reduced integer word.

    Symbols are dense ranks ``1..sigma``; build one with :func:`rank_reduce`
    unless the input is already dense.
    """

    __slots__ = ("symbols", "sigma", "_seq")

    def __init__(self, symbols: Iterable[int], check: bool = True):
        arr = np.asarray(list(symbols) if not isinstance(symbols, np.ndarray) else symbols,
                         dtype=np.int32).ravel().copy()
        arr.setflags(write=False)
        sigma = int(arr.max()) if arr.size else 0
        if check and arr.size:
            used = np.unique(arr)
            if used[0] != 1 or used[-1] != len(used):
                raise ValueError("symbols must be dense ranks 1..sigma")
        self.symbols = arr
        self.sigma = sigma
        self._seq = None

    @property
    def n(self) -> int:
        return int(self.symbols.size)

    @property
    def seq(self) -> tuple[int, ...]:
        """Symbols as a tuple of Python ints (fast for scalar loops)."""
        if self._seq is None:
            self._seq = tuple(self.symbols.tolist())
        return self._seq

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k):
        return self.seq[k]

    def __iter__(self):
        return iter(self.seq)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.seq == other.seq
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.seq)

    def __repr__(self) -> str:
        if self.n <= 32:
            return f"Word({list(self.seq)})"
        return f"Word(n={self.n}, sigma={self.sigma})"

    def to_text(self, alphabet: str = "abcdefghijklmnopqrstuvwxyz") -> str:
        """Render with letters; ranks beyond the alphabet fall back to ``<k>``."""
        return "".join(alphabet[s - 1] if s <= len(alphabet) else f"<{s}>" for s in self.seq)


def rank_reduce(raw: Sequence) -> Word:
    """Replace each symbol by its 1-based rank among the distinct symbols.

    >>> list(rank_reduce("aabb"))
    [1, 1, 2, 2]
    >>> list(rank_reduce((10, 3, 10)))
    [2, 1, 2]
    """
    if isinstance(raw, (bytes, bytearray)):
        raw = list(raw)
    elif isinstance(raw, str):
        raw = list(raw)
    if isinstance(raw, np.ndarray) and raw.size:
        _, inv = np.unique(raw, return_inverse=True)
        return Word(inv.ravel() + 1, check=False)
    alphabet = sorted(set(raw))
    ranks = {s: k + 1 for k, s in enumerate(alphabet)}
    return Word([ranks[s] for s in raw], check=False)


def as_word(w) -> Word:
    """Accept a Word, a string, bytes or an integer sequence."""
    if isinstance(w, Word):
        return w
    return rank_reduce(w)
