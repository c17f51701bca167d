# cython: language_level=3
"""Compiled kernels: suffix array, LCP, LSF arrays and the main LUF sweep.

Mirrors ``_fallback.py`` and the Python path of ``luf.py`` step for step;
the two must return identical arrays and counters.
"""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t lufa_mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return (uint64_t)(((unsigned __int128)a * b) % p);
    }
    static inline uint64_t lufa_mulmod61(uint64_t a, uint64_t b) {
        unsigned __int128 z = (unsigned __int128)a * b;
        uint64_t lo = (uint64_t)(z & (((uint64_t)1 << 61) - 1));
        uint64_t hi = (uint64_t)(z >> 61);
        const uint64_t p = ((uint64_t)1 << 61) - 1;
        uint64_t s = lo + hi;
        s = (s & p) + (s >> 61);
        return s >= p ? s - p : s;
    }
    """
    uint64_t lufa_mulmod(uint64_t a, uint64_t b, uint64_t p) nogil
    uint64_t lufa_mulmod61(uint64_t a, uint64_t b) nogil

cdef uint64_t PRIME1 = (<uint64_t>1 << 61) - 1
cdef uint64_t PRIME2 = 2305843009212645239ULL


def suffix_array(const int32_t[::1] w):
    """Prefix doubling with radix sort, O(n log n)."""
    cdef Py_ssize_t n = w.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int32)
    cdef int32_t[::1] sa = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] rank = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] tmp = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] nrank = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t i, t, idx, k
    cdef int32_t sigma = 0, R, p, a2, b2
    for i in range(n):
        if w[i] > sigma:
            sigma = w[i]
    cdef Py_ssize_t csize = (sigma if sigma > n else n) + 2
    cdef int32_t[::1] cnt = np.zeros(csize, dtype=np.int32)

    for i in range(n):
        cnt[w[i]] += 1
    for i in range(1, csize):
        cnt[i] += cnt[i - 1]
    for i in range(n - 1, -1, -1):
        cnt[w[i]] -= 1
        sa[cnt[w[i]]] = <int32_t>i
    R = 1
    rank[sa[0]] = 1
    for idx in range(1, n):
        if w[sa[idx]] != w[sa[idx - 1]]:
            R += 1
        rank[sa[idx]] = R

    k = 1
    while R < n:
        t = 0
        for i in range(n - k if n > k else 0, n):
            tmp[t] = <int32_t>i
            t += 1
        for idx in range(n):
            if sa[idx] >= k:
                tmp[t] = <int32_t>(sa[idx] - k)
                t += 1
        for i in range(R + 2):
            cnt[i] = 0
        for i in range(n):
            cnt[rank[i]] += 1
        for i in range(1, R + 2):
            cnt[i] += cnt[i - 1]
        for idx in range(n - 1, -1, -1):
            p = tmp[idx]
            cnt[rank[p]] -= 1
            sa[cnt[rank[p]]] = p
        R = 1
        nrank[sa[0]] = 1
        for idx in range(1, n):
            p = sa[idx]
            a2 = rank[p + k] if p + k < n else 0
            b2 = rank[sa[idx - 1] + k] if sa[idx - 1] + k < n else 0
            if rank[p] != rank[sa[idx - 1]] or a2 != b2:
                R += 1
            nrank[p] = R
        rank, nrank = nrank, rank
        k *= 2
    return np.asarray(sa)


def lcp_kasai(const int32_t[::1] w, const int32_t[::1] sa):
    cdef Py_ssize_t n = w.shape[0]
    rank_arr = np.empty(n, dtype=np.int32)
    lcp_arr = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] rank = rank_arr
    cdef int32_t[::1] lcp = lcp_arr
    cdef Py_ssize_t i, j, r, h = 0
    for i in range(n):
        rank[sa[i]] = <int32_t>i
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and w[i + h] == w[j + h]:
            h += 1
        lcp[r] = <int32_t>h
        if h:
            h -= 1
    return rank_arr, lcp_arr


cdef inline Py_ssize_t _find(int32_t* parent, Py_ssize_t x) nogil:
    cdef Py_ssize_t root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = <int32_t>root
        x = nxt
    return root


def lsf_from_index(const int32_t[::1] sa, const int32_t[::1] rank, const int32_t[::1] lcp):
    cdef Py_ssize_t n = sa.shape[0]
    length_arr = np.zeros(n, dtype=np.int32)
    ref_arr = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] length = length_arr
    cdef int32_t[::1] ref = ref_arr
    if n == 0:
        return length_arr, ref_arr
    cdef int32_t[::1] sk = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] sm = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t top, c, t, k, i, v
    cdef int32_t cur, h, big = <int32_t>(n + 1)

    top = 0
    for c in range(n):
        cur = lcp[c] if c else 0
        while top:
            t = sk[top - 1]
            h = sm[top - 1] if sm[top - 1] < cur else cur
            if sa[t] < sa[c]:
                top -= 1
                if h > length[sa[t]]:
                    length[sa[t]] = h
                cur = h
            else:
                sm[top - 1] = h
                break
        sk[top] = <int32_t>c
        sm[top] = big
        top += 1

    top = 0
    for c in range(n - 1, -1, -1):
        cur = lcp[c + 1] if c + 1 < n else 0
        while top:
            t = sk[top - 1]
            h = sm[top - 1] if sm[top - 1] < cur else cur
            if sa[t] < sa[c]:
                top -= 1
                if h > length[sa[t]]:
                    length[sa[t]] = h
                cur = h
            else:
                sm[top - 1] = h
                break
        sk[top] = <int32_t>c
        sm[top] = big
        top += 1

    cdef int32_t maxv = 0
    for i in range(n):
        if length[i] > maxv:
            maxv = length[i]
    if maxv == 0:
        return length_arr, ref_arr

    # bucket edges and queries by value, largest first
    cdef int32_t[::1] ecnt = np.zeros(maxv + 2, dtype=np.int32)
    cdef int32_t[::1] qcnt = np.zeros(maxv + 2, dtype=np.int32)
    cdef int32_t[::1] edges = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] queries = np.empty(n, dtype=np.int32)
    for k in range(1, n):
        v = lcp[k] if lcp[k] < maxv else maxv
        if v:
            ecnt[v] += 1
    for i in range(n):
        if length[i]:
            qcnt[length[i]] += 1
    for v in range(1, maxv + 2):
        ecnt[v] += ecnt[v - 1]
        qcnt[v] += qcnt[v - 1]
    for k in range(n - 1, 0, -1):
        v = lcp[k] if lcp[k] < maxv else maxv
        if v:
            ecnt[v] -= 1
            edges[ecnt[v]] = <int32_t>k
    for i in range(n - 1, -1, -1):
        v = length[i]
        if v:
            qcnt[v] -= 1
            queries[qcnt[v]] = <int32_t>i

    cdef int32_t* parent = <int32_t*>malloc(n * sizeof(int32_t))
    cdef int32_t* best = <int32_t*>malloc(n * sizeof(int32_t))
    cdef Py_ssize_t a, b, e, qi
    try:
        for i in range(n):
            parent[i] = <int32_t>i
            best[i] = sa[i]
        for v in range(maxv, 0, -1):
            for e in range(ecnt[v], ecnt[v + 1]):
                k = edges[e]
                a = _find(parent, k - 1)
                b = _find(parent, k)
                if a != b:
                    parent[a] = <int32_t>b
                    if best[a] > best[b]:
                        best[b] = best[a]
            for qi in range(qcnt[v], qcnt[v + 1]):
                i = queries[qi]
                ref[i] = best[_find(parent, rank[i])]
    finally:
        free(parent)
        free(best)
    return length_arr, ref_arr


cdef struct Hashes:
    uint64_t* h1
    uint64_t* p1
    uint64_t* h2
    uint64_t* p2


cdef inline uint64_t _fp1(Hashes* H, Py_ssize_t s, Py_ssize_t ln) nogil:
    cdef uint64_t x = lufa_mulmod61(H.h1[s], H.p1[ln])
    cdef uint64_t y = H.h1[s + ln]
    return y - x if y >= x else y + PRIME1 - x


cdef inline uint64_t _fp2(Hashes* H, Py_ssize_t s, Py_ssize_t ln) nogil:
    cdef uint64_t x = lufa_mulmod(H.h2[s], H.p2[ln], PRIME2)
    cdef uint64_t y = H.h2[s + ln]
    return y - x if y >= x else y + PRIME2 - x


cdef class _Run:
    cdef const int32_t[::1] w
    cdef Py_ssize_t n
    cdef int backend
    cdef Hashes H
    cdef int32_t* fail
    cdef Py_ssize_t fail_j, fail_m
    cdef public long long calls, successes, false_pos, probes

    def __cinit__(self):
        self.H.h1 = NULL
        self.H.p1 = NULL
        self.H.h2 = NULL
        self.H.p2 = NULL
        self.fail = NULL

    def __dealloc__(self):
        free(self.H.h1)
        free(self.H.p1)
        free(self.H.h2)
        free(self.H.p2)
        free(self.fail)

    cdef void setup(self, const int32_t[::1] w, int backend, uint64_t b1, uint64_t b2) except *:
        cdef Py_ssize_t n = w.shape[0], k
        self.w = w
        self.n = n
        self.backend = backend
        self.fail_j = -1
        self.fail_m = -1
        self.calls = 0
        self.successes = 0
        self.false_pos = 0
        self.probes = 0
        if backend == 0:
            self.fail = <int32_t*>malloc((n + 1) * sizeof(int32_t))
            if self.fail == NULL:
                raise MemoryError()
            return
        self.H.h1 = <uint64_t*>malloc((n + 1) * sizeof(uint64_t))
        self.H.p1 = <uint64_t*>malloc((n + 1) * sizeof(uint64_t))
        self.H.h2 = <uint64_t*>malloc((n + 1) * sizeof(uint64_t))
        self.H.p2 = <uint64_t*>malloc((n + 1) * sizeof(uint64_t))
        if self.H.h1 == NULL or self.H.p1 == NULL or self.H.h2 == NULL or self.H.p2 == NULL:
            raise MemoryError()
        self.H.h1[0] = 0
        self.H.h2[0] = 0
        self.H.p1[0] = 1
        self.H.p2[0] = 1
        for k in range(n):
            self.H.h1[k + 1] = (lufa_mulmod61(self.H.h1[k], b1) + <uint64_t>w[k]) % PRIME1
            self.H.p1[k + 1] = lufa_mulmod61(self.H.p1[k], b1)
            self.H.h2[k + 1] = (lufa_mulmod(self.H.h2[k], b2, PRIME2) + <uint64_t>w[k]) % PRIME2
            self.H.p2[k + 1] = lufa_mulmod(self.H.p2[k], b2, PRIME2)

    cdef Py_ssize_t beta_exact(self, Py_ssize_t q, Py_ssize_t j, Py_ssize_t floor, Py_ssize_t top) nogil:
        cdef const int32_t[::1] w = self.w
        cdef Py_ssize_t m = top, i, k, s, t
        cdef int32_t c
        cdef int32_t* b = self.fail
        # failure function of the pattern prefix w[j:j+m], cached per j
        if self.fail_j != j or self.fail_m < m:
            b[0] = 0
            k = 0
            for i in range(1, m):
                c = w[j + i]
                while k and w[j + k] != c:
                    k = b[k - 1]
                if w[j + k] == c:
                    k += 1
                b[i] = <int32_t>k
            self.fail_j = j
            self.fail_m = m
        s = 0
        for t in range(q - m, q):
            c = w[t]
            if s == m:
                s = b[s - 1]
            while s and w[j + s] != c:
                s = b[s - 1]
            if w[j + s] == c:
                s += 1
        k = 0
        while s > floor:
            k = s
            s = b[s - 1]
        return k

    cdef Py_ssize_t beta_fp(self, Py_ssize_t q, Py_ssize_t j, Py_ssize_t floor, Py_ssize_t top) nogil:
        cdef const int32_t[::1] w = self.w
        cdef int32_t first = w[j], last = w[q - 1]
        cdef Py_ssize_t d = floor + 1, beta, hi, t
        cdef bint ok
        while d <= top:
            hi = 2 * d if 2 * d <= top + 1 else top + 1
            for beta in range(d, hi):
                self.probes += 1
                if w[q - beta] != first or w[j + beta - 1] != last:
                    continue
                if _fp1(&self.H, j, beta) != _fp1(&self.H, q - beta, beta):
                    continue
                if _fp2(&self.H, j, beta) != _fp2(&self.H, q - beta, beta):
                    continue
                if self.backend == 2:
                    ok = True
                    for t in range(beta):
                        if w[j + t] != w[q - beta + t]:
                            ok = False
                            break
                    if not ok:
                        self.false_pos += 1
                        continue
                return beta
            d *= 2
        return 0

    cdef Py_ssize_t find_beta(self, Py_ssize_t q, Py_ssize_t j, Py_ssize_t floor, Py_ssize_t limit) nogil:
        cdef Py_ssize_t top = self.n - j, r
        if q < top:
            top = q
        if limit >= 0 and limit < top:
            top = limit
        self.calls += 1
        if top <= floor:
            return 0
        if self.backend == 0:
            self.probes += top - floor
            r = self.beta_exact(q, j, floor, top)
            if r > top:
                r = 0
        else:
            r = self.beta_fp(q, j, floor, top)
        if r:
            self.successes += 1
        return r


def luf_run(const int32_t[::1] w, const int32_t[::1] lsf_len, const int32_t[::1] lsf_ref,
            int backend, uint64_t b1, uint64_t b2, bint floors, bint cap, bint debug):
    """Main right-to-left sweep; see ``lufarray.luf`` for the contract.

    Returns ``(luf, hook, push_counts, last_push, scalars, push_log, found)``.
    """
    cdef Py_ssize_t n = w.shape[0]
    luf_arr = np.zeros(n, dtype=np.int32)
    hook_arr = np.arange(n, dtype=np.int32)
    counts_arr = np.zeros(n, dtype=np.int32)
    last_arr = np.zeros(n, dtype=np.int32)
    maxref_arr = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] luf = luf_arr
    cdef int32_t[::1] hook = hook_arr
    cdef int32_t[::1] counts = counts_arr
    cdef int32_t[::1] last = last_arr
    cdef int32_t[::1] maxref = maxref_arr
    cdef int32_t[::1] st_len = np.empty(n + 1, dtype=np.int32)
    cdef int32_t[::1] st_pos = np.empty(n + 1, dtype=np.int32)
    cdef Py_ssize_t i, j, q, p, beta, top, floor, limit
    cdef long long pushes = 0, hook_calls = 0, violations = 0
    log = [] if debug else None
    found = []

    cdef _Run run = _Run()
    run.setup(w, backend, b1, b2)

    for i in range(n):
        if lsf_ref[i] >= 0 and lsf_len[i] > maxref[lsf_ref[i]]:
            maxref[lsf_ref[i]] = lsf_len[i]

    for i in range(n - 1, -1, -1):
        if lsf_len[i] == 0:
            luf[i] = <int32_t>(n - i)
        else:
            j = lsf_ref[i]
            if lsf_len[i] < luf[j]:
                luf[i] = <int32_t>(j + luf[j] - i)
            elif i >= hook[j]:
                luf[i] = luf[j]
            else:
                luf[i] = <int32_t>(hook[j] - i)
        if maxref[i] == 0 or maxref[i] < luf[i]:
            continue

        # FindHook(i)
        hook_calls += 1
        j = i
        floor = 2 * last[j] if floors else 0
        limit = luf[j] if cap else -1
        top = 0
        q = hook[j]
        beta = run.find_beta(q, j, floor, limit)
        while beta:
            while top and st_len[top - 1] < beta:
                top -= 1
                hook[st_pos[top]] = <int32_t>q
            p = q - beta
            st_len[top] = <int32_t>beta
            st_pos[top] = <int32_t>p
            top += 1
            pushes += 1
            if counts[p] and beta <= 2 * last[p]:
                violations += 1
            counts[p] += 1
            last[p] = <int32_t>beta
            if debug:
                log.append((j, p, beta))
            q = hook[p]
            beta = run.find_beta(q, j, floor, limit)
        while top:
            top -= 1
            hook[st_pos[top]] = <int32_t>q
        hook[j] = <int32_t>q
        found.append((j, q))

    scalars = (pushes, run.calls, run.successes, hook_calls, run.false_pos, violations, run.probes)
    return luf_arr, hook_arr, counts_arr, last_arr, scalars, log, found
