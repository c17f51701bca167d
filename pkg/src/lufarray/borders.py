"""Border arrays, periods and unbordered decompositions."""

from __future__ import annotations

from typing import Sequence

from .core import Word, as_word


def _failure(seq: Sequence[int]) -> list[int]:
    # b[k] = longest border of seq[:k+1]
    m = len(seq)
    b = [0] * m
    k = 0
    for i in range(1, m):
        c = seq[i]
        while k and seq[k] != c:
            k = b[k - 1]
        if seq[k] == c:
            k += 1
        b[i] = k
    return b


def border_array(w) -> list[int]:
    """Longest-border lengths of every prefix.

    Entry ``k`` belongs to the prefix of length ``k + 1``.

    >>> border_array("aabaabaa")
    [0, 1, 0, 1, 2, 3, 4, 5]
    """
    return _failure(as_word(w).seq)


def min_period(w) -> int:
    w = as_word(w)
    if w.n == 0:
        raise ValueError("empty word has no period")
    return w.n - border_array(w)[-1]


def is_unbordered(w, start: int, stop: int) -> bool:
    """True iff the factor ``w[start:stop]`` has only the empty border."""
    w = as_word(w)
    if not 0 <= start < stop <= w.n:
        raise IndexError(f"factor [{start}:{stop}) out of range for n={w.n}")
    return _failure(w.seq[start:stop])[-1] == 0


def unbordered_decomposition(w) -> list[int]:
    """Piece lengths of the unique factorisation into unbordered prefixes.

    Pieces are listed left to right, so the first one is the longest
    unbordered prefix and the last one is the shortest border (or the whole
    word when it is unbordered). Built greedily from the right: the shortest
    prefix of ``w`` ending the remaining word is the tail of the border
    chain of that remaining prefix.
    """
    w = as_word(w)
    b = border_array(w)
    pieces = []
    m = w.n
    while m > 0:
        k = m
        while b[k - 1]:
            k = b[k - 1]
        pieces.append(k)
        m -= k
    pieces.reverse()
    return pieces


def split(w, pieces: Sequence[int]) -> list[tuple[int, ...]]:
    """Cut ``w`` into consecutive factors of the given lengths."""
    w = as_word(w)
    out, pos = [], 0
    for p in pieces:
        out.append(w.seq[pos:pos + p])
        pos += p
    return out


__all__ = ["Word", "border_array", "min_period", "is_unbordered",
           "unbordered_decomposition", "split"]
