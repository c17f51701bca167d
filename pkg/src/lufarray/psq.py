"""Shortest prefix-suffix queries (FindBeta).

``find_beta(backend, q, j, floor)`` returns the smallest ``beta > floor``
such that the length-``beta`` prefix of ``w[j:]`` is a suffix of ``w[:q]``,
or 0 when there is none. Two backends answer it:

* ``exact``: a failure-function scan, deterministic.
* ``fingerprint``: Karp-Rabin fingerprints under two 61-bit primes, scanning
  candidate lengths over doubling ranges ``[d, 2d)`` starting at
  ``d = floor + 1``. ``paranoid=True`` re-checks every fingerprint hit
  symbol by symbol.
"""

from __future__ import annotations

import random
from typing import Optional

from .core import Word, as_word

PRIME1 = (1 << 61) - 1
PRIME2 = 2305843009212645239

BACKENDS = ("exact", "fingerprint", "fingerprint-paranoid")


def draw_bases(seed: int) -> tuple[int, int]:
    """Hash bases for a seed; shared by the Python and compiled paths."""
    rng = random.Random(seed)
    return rng.randrange(1 << 20, PRIME1 - 1), rng.randrange(1 << 20, PRIME2 - 1)


def _prefix_hashes(seq, base: int, prime: int) -> tuple[list[int], list[int]]:
    h = [0] * (len(seq) + 1)
    pw = [1] * (len(seq) + 1)
    for k, c in enumerate(seq):
        h[k + 1] = (h[k] * base + c) % prime
        pw[k + 1] = pw[k] * base % prime
    return h, pw


class FingerprintIndex:
    """Prefix fingerprints of a word under two polynomial hashes."""

    def __init__(self, w, seed: int = 0):
        w = as_word(w)
        self.n = w.n
        self.seed = seed
        self.bases = draw_bases(seed)
        self.h1, self.pw1 = _prefix_hashes(w.seq, self.bases[0], PRIME1)
        self.h2, self.pw2 = _prefix_hashes(w.seq, self.bases[1], PRIME2)

    def fingerprint(self, start: int, length: int) -> tuple[int, int]:
        end = start + length
        return ((self.h1[end] - self.h1[start] * self.pw1[length]) % PRIME1,
                (self.h2[end] - self.h2[start] * self.pw2[length]) % PRIME2)


def factor_eq(fp: FingerprintIndex, i: int, j: int, length: int) -> bool:
    """Fingerprint equality of ``w[i:i+length]`` and ``w[j:j+length]``.

    Equal factors always compare equal; unequal ones collide with
    probability at most about ``2 * n / 2**61``.
    """
    if length < 0 or i < 0 or j < 0 or i + length > fp.n or j + length > fp.n:
        raise IndexError(f"factor ranges ({i}, {j}, len={length}) exceed n={fp.n}")
    return fp.fingerprint(i, length) == fp.fingerprint(j, length)


class ExactBackend:
    name = "exact"

    def __init__(self, w):
        self.word = as_word(w)
        self._pattern_start = None
        self._fail: list[int] = []
        self.probes = 0

    def _failure_of(self, j: int) -> list[int]:
        # one FindHook call issues all its queries for the same j
        if self._pattern_start != j:
            seq = self.word.seq
            m = len(seq) - j
            b = [0] * m
            k = 0
            for i in range(1, m):
                c = seq[j + i]
                while k and seq[j + k] != c:
                    k = b[k - 1]
                if seq[j + k] == c:
                    k += 1
                b[i] = k
            self._pattern_start, self._fail = j, b
        return self._fail

    def find_beta(self, q: int, j: int, floor: int = 0, limit: Optional[int] = None) -> int:
        seq = self.word.seq
        m = self.word.n - j
        top = min(m, q) if limit is None else min(m, q, limit)
        if top <= floor:
            return 0
        self.probes += top - floor
        b = self._failure_of(j)
        # the longest prefix of w[j:] ending at q only depends on the last m symbols
        s = 0
        for t in range(max(0, q - m), q):
            c = seq[t]
            if s == m:
                s = b[s - 1]
            while s and seq[j + s] != c:
                s = b[s - 1]
            if seq[j + s] == c:
                s += 1
        best = 0
        while s > floor:
            best = s
            s = b[s - 1]
        return best if best <= top else 0


class FingerprintBackend:
    def __init__(self, w, seed: int = 0, paranoid: bool = False):
        self.word = as_word(w)
        self.fp = FingerprintIndex(self.word, seed)
        self.paranoid = paranoid
        self.name = "fingerprint-paranoid" if paranoid else "fingerprint"
        self.false_positives = 0
        self.probes = 0

    def find_beta(self, q: int, j: int, floor: int = 0, limit: Optional[int] = None) -> int:
        seq = self.word.seq
        top = min(self.word.n - j, q) if limit is None else min(self.word.n - j, q, limit)
        first, last = seq[j], seq[q - 1] if q else None
        fp = self.fp
        d = floor + 1
        while d <= top:
            for beta in range(d, min(2 * d, top + 1)):
                self.probes += 1
                if seq[q - beta] != first or seq[j + beta - 1] != last:
                    continue
                if fp.fingerprint(j, beta) != fp.fingerprint(q - beta, beta):
                    continue
                if self.paranoid and seq[j:j + beta] != seq[q - beta:q]:
                    self.false_positives += 1
                    continue
                return beta
            d *= 2
        return 0


def make_backend(w, name: str = "exact", seed: int = 0):
    if name == "exact":
        return ExactBackend(w)
    if name == "fingerprint":
        return FingerprintBackend(w, seed)
    if name == "fingerprint-paranoid":
        return FingerprintBackend(w, seed, paranoid=True)
    raise ValueError(f"unknown backend {name!r}; choose from {', '.join(BACKENDS)}")


def _check_query(n: int, q: int, j: int, floor: int) -> None:
    if q > j:
        raise ValueError(f"left context end q={q} lies after pattern start j={j}")
    if q < 0 or j >= n or floor < 0:
        raise IndexError(f"query (q={q}, j={j}, floor={floor}) out of range for n={n}")


def find_beta(backend, q: int, j: int, floor: int = 0, limit: Optional[int] = None) -> int:
    _check_query(backend.word.n, q, j, floor)
    return backend.find_beta(q, j, floor, limit)


def find_beta_exact(w, q: int, j: int, floor: int = 0) -> int:
    w = as_word(w)
    _check_query(w.n, q, j, floor)
    return ExactBackend(w).find_beta(q, j, floor)


__all__ = ["Word", "FingerprintIndex", "factor_eq", "find_beta", "find_beta_exact",
           "ExactBackend", "FingerprintBackend", "make_backend", "BACKENDS"]
