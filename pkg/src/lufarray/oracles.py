"""Brute-force reference implementations.

Nothing here imports the fast paths; only :class:`~lufarray.core.Word` is shared.
"""

from __future__ import annotations

from .core import as_word


def luf_naive(w) -> list[int]:
    """Border array of every suffix; the answer is its rightmost zero."""
    seq = as_word(w).seq
    n = len(seq)
    out = [0] * n
    for i in range(n):
        x = seq[i:]
        b = [0] * (n - i)
        best = 1
        k = 0
        for t in range(1, n - i):
            c = x[t]
            while k and x[k] != c:
                k = b[k - 1]
            if x[k] == c:
                k += 1
            else:
                best = t + 1
            b[t] = k
        out[i] = best
    return out


def mu(w, luf=None) -> int:
    """Length of the longest unbordered factor."""
    w = as_word(w)
    if w.n == 0:
        raise ValueError("empty word has no unbordered factor")
    return max(luf_naive(w) if luf is None else luf)


def _shortest_match(seq, q: int, j: int) -> int:
    # shortest prefix of seq[j:] that is a suffix of seq[:q]
    for beta in range(1, min(len(seq) - j, q) + 1):
        if seq[j:j + beta] == seq[q - beta:q]:
            return beta
    return 0


def hook_naive(w, j: int) -> int:
    """Leftmost ``q`` such that ``w[q:j]`` splits into unbordered prefixes of ``w[j:]``.

    Greedy right-to-left trimming of shortest matches, no memoisation.
    """
    seq = as_word(w).seq
    if not 0 <= j < len(seq):
        raise IndexError(f"position {j} out of range")
    q = j
    while True:
        beta = _shortest_match(seq, q, j)
        if not beta:
            return q
        q -= beta


def hook_chain(w, j: int) -> list[int]:
    """Piece lengths of the greedy decomposition of ``w[hook(j):j]``, right to left."""
    seq = as_word(w).seq
    q, pieces = j, []
    while True:
        beta = _shortest_match(seq, q, j)
        if not beta:
            return pieces
        pieces.append(beta)
        q -= beta


def bordered(seq, start: int, stop: int) -> bool:
    """Direct check over all border lengths of ``seq[start:stop]``."""
    m = stop - start
    return any(seq[start:start + b] == seq[stop - b:stop] for b in range(1, m))
