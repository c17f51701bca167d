"""Pure-Python/numpy versions of the array kernels in ``_kernels.pyx``.

Both modules expose the same functions with the same conventions:
0-based positions, int32 arrays, ``-1`` for an absent reference.
"""

from __future__ import annotations

import numpy as np


def suffix_array(w: np.ndarray) -> np.ndarray:
    """Prefix doubling over numpy lexsort, O(n log^2 n)."""
    n = int(w.size)
    if n == 0:
        return np.zeros(0, dtype=np.int32)
    rank = w.astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    r = rank[sa]
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.concatenate(([1], 1 + np.cumsum(r[1:] != r[:-1])))
    k = 1
    while rank.max() < n:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[:n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1, r2 = rank[sa], second[sa]
        diff = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.concatenate(([1], 1 + np.cumsum(diff)))
        k *= 2
    return sa.astype(np.int32)


def lcp_kasai(w: np.ndarray, sa: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(rank, lcp)`` with ``lcp[k] = LCP(sa[k-1], sa[k])``, ``lcp[0] = 0``."""
    seq = w.tolist()
    sal = sa.tolist()
    n = len(seq)
    rank = [0] * n
    for k, p in enumerate(sal):
        rank[p] = k
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sal[r - 1]
        while i + h < n and j + h < n and seq[i + h] == seq[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(rank, dtype=np.int32), np.asarray(lcp, dtype=np.int32)


def lsf_from_index(sa: np.ndarray, rank: np.ndarray, lcp: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Longest successor factor lengths and rightmost references.

    Lengths come from the nearest suffix-array neighbours (on each side)
    whose text position is larger. References come from a union-find sweep
    over LCP values in decreasing order, tracking the largest position of
    each merged suffix-array interval.
    """
    sal, lcpl = sa.tolist(), lcp.tolist()
    n = len(sal)
    length = [0] * n
    big = n + 1

    # nearest larger position to the right in sa order
    stack_k, stack_m = [], []
    for c in range(n):
        cur = lcpl[c] if c else 0
        pc = sal[c]
        while stack_k:
            t = stack_k[-1]
            h = stack_m[-1] if stack_m[-1] < cur else cur
            if sal[t] < pc:
                stack_k.pop()
                stack_m.pop()
                if h > length[sal[t]]:
                    length[sal[t]] = h
                cur = h
            else:
                stack_m[-1] = h
                break
        stack_k.append(c)
        stack_m.append(big)

    # nearest larger position to the left in sa order
    stack_k, stack_m = [], []
    for c in range(n - 1, -1, -1):
        cur = lcpl[c + 1] if c + 1 < n else 0
        pc = sal[c]
        while stack_k:
            t = stack_k[-1]
            h = stack_m[-1] if stack_m[-1] < cur else cur
            if sal[t] < pc:
                stack_k.pop()
                stack_m.pop()
                if h > length[sal[t]]:
                    length[sal[t]] = h
                cur = h
            else:
                stack_m[-1] = h
                break
        stack_k.append(c)
        stack_m.append(big)

    ref = [-1] * n
    maxv = max(length) if n else 0
    if maxv:
        edges = [[] for _ in range(maxv + 1)]
        for k in range(1, n):
            v = lcpl[k]
            if v:
                edges[min(v, maxv)].append(k)
        queries = [[] for _ in range(maxv + 1)]
        for i, v in enumerate(length):
            if v:
                queries[v].append(i)
        parent = list(range(n))
        top = list(sal)
        rankl = rank.tolist()

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        for v in range(maxv, 0, -1):
            for k in edges[v]:
                a, b = find(k - 1), find(k)
                if a != b:
                    parent[a] = b
                    if top[a] > top[b]:
                        top[b] = top[a]
            for i in queries[v]:
                ref[i] = top[find(rankl[i])]
    return np.asarray(length, dtype=np.int32), np.asarray(ref, dtype=np.int32)
