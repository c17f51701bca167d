"""Longest successor factor arrays via a suffix array and its LCP array."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _accel, _fallback
from .core import as_word


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int32)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SuffixIndex:
    sa: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray  # lcp[k] = LCP of sa[k-1] and sa[k]; lcp[0] = 0


@dataclass(frozen=True)
class LsfArrays:
    """``length[i]`` is the longest factor at ``i`` recurring at some ``j > i``;
    ``ref[i]`` is the rightmost such ``j`` or ``None``."""

    length: np.ndarray
    ref_array: np.ndarray  # -1 marks an absent reference

    @property
    def n(self) -> int:
        return int(self.length.size)

    @property
    def ref(self) -> list[Optional[int]]:
        return [None if r < 0 else r for r in self.ref_array.tolist()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LsfArrays):
            return NotImplemented
        return (np.array_equal(self.length, other.length)
                and np.array_equal(self.ref_array, other.ref_array))

    def rows(self, one_based: bool = True) -> tuple[list[int], list[Optional[int]]]:
        """Lengths and references as plain lists, references shifted to 1-based."""
        off = 1 if one_based else 0
        return self.length.tolist(), [None if r is None else r + off for r in self.ref]


def build_suffix_index(w, impl: str = "auto") -> SuffixIndex:
    w = as_word(w)
    mod = _accel.kernels if _accel.use_ext(impl) else _fallback
    sa = mod.suffix_array(w.symbols)
    rank, lcp = mod.lcp_kasai(w.symbols, sa)
    return SuffixIndex(_frozen(sa), _frozen(rank), _frozen(lcp))


def compute_lsf(w, impl: str = "auto", index: Optional[SuffixIndex] = None) -> LsfArrays:
    w = as_word(w)
    if index is None:
        index = build_suffix_index(w, impl)
    mod = _accel.kernels if _accel.use_ext(impl) else _fallback
    length, ref = mod.lsf_from_index(index.sa, index.rank, index.lcp)
    return LsfArrays(_frozen(length), _frozen(ref))


def lsf_naive(w) -> LsfArrays:
    """Quadratic reference built from direct symbol comparisons.

    Row ``d`` of the match table holds ``w[i] == w[i + d]``; the common
    prefix of suffixes ``i`` and ``i + d`` is the distance from ``i`` to the
    next mismatch in that row.
    """
    w = as_word(w)
    n = w.n
    length = np.zeros(n, dtype=np.int32)
    ref = np.full(n, -1, dtype=np.int32)
    if n < 2:
        return LsfArrays(_frozen(length), _frozen(ref))
    s = w.symbols.astype(np.int64)
    idx = np.arange(n)
    shift = np.arange(1, n)[:, None]
    partner = idx[None, :] + shift
    valid = partner < n
    match = np.zeros((n - 1, n + 1), dtype=bool)
    match[:, :n] = valid & (s[None, :] == s[np.minimum(partner, n - 1)])
    # next mismatch at or after i, per row
    stop = np.where(match, n + 1, np.arange(n + 1)[None, :])
    stop = np.minimum.accumulate(stop[:, ::-1], axis=1)[:, ::-1]
    lcp = (stop[:, :n] - idx[None, :]) * valid  # lcp[d-1, i] = LCP(i, i + d)
    best = lcp.max(axis=0)
    # largest shift reaching the best length gives the rightmost reference
    last = (n - 2) - np.argmax((lcp == best[None, :])[::-1], axis=0)
    has = best > 0
    length[has] = best[has]
    ref[has] = (idx + last + 1)[has]
    return LsfArrays(_frozen(length), _frozen(ref))
