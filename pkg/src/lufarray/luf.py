"""Longest unbordered factor array: right-to-left sweep with memoised hooks.

Each position ``i`` is resolved from its successor-factor reference ``j``:

* no recurring factor: the whole suffix is unbordered;
* the recurring factor is shorter than ``LUF[j]``: both factors end together;
* otherwise the answer comes from ``hook(j)``, the leftmost start of a chain
  of unbordered prefixes of ``w[j:]`` ending right before ``j``.

Hooks are found by FindHook, which cuts those prefixes right to left and
records the cut positions on a stack. Popped entries leave their partial
hook in ``HOOK`` so later calls can jump over chains already decomposed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _accel
from .core import Word, as_word
from .lsf import LsfArrays, compute_lsf
from .psq import draw_bases, make_backend

CSV_HEADER = ("n", "sigma", "total_pushes", "t_max", "findbeta_calls",
              "findbeta_successes", "wall_time_ns", "backend")

_BACKEND_CODES = {"exact": 0, "fingerprint": 1, "fingerprint-paranoid": 2}


class ChopStack:
    """(length, position) pairs; lengths never increase towards the top."""

    __slots__ = ("_items", "check")

    def __init__(self, items=(), check: bool = False):
        self._items: list[tuple[int, int]] = list(items)
        self.check = check

    def push(self, length: int, pos: int) -> None:
        if self.check and self._items and self._items[-1][0] < length:
            raise AssertionError(f"push ({length}, {pos}) above shorter entry {self._items[-1]}")
        self._items.append((length, pos))

    def pop(self) -> tuple[int, int]:
        return self._items.pop()

    def top_length(self) -> int:
        return self._items[-1][0]

    def clear(self) -> None:
        self._items.clear()

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __iter__(self):
        return iter(self._items)

    def __repr__(self) -> str:
        return f"ChopStack({self._items})"


@dataclass
class RunStats:
    n: int
    sigma: int = 0
    backend: str = "exact"
    total_pushes: int = 0
    findbeta_calls: int = 0
    findbeta_successes: int = 0
    findhook_calls: int = 0
    false_positives: int = 0
    doubling_violations: int = 0
    findbeta_probes: int = 0  # candidate lengths examined (exact: lengths spanned)
    wall_time_ns: int = 0
    push_counts: np.ndarray = None
    last_push: np.ndarray = None
    # (reference, position, length) per push, in order; only in debug runs
    push_log: Optional[list[tuple[int, int, int]]] = None

    def __post_init__(self):
        if self.push_counts is None:
            self.push_counts = np.zeros(self.n, dtype=np.int32)
        if self.last_push is None:
            self.last_push = np.zeros(self.n, dtype=np.int32)

    @property
    def t_max(self) -> int:
        return int(self.push_counts.max()) if self.n else 0

    def record_push(self, j: int, pos: int, length: int) -> None:
        self.total_pushes += 1
        if length <= 2 * self.last_push[pos] and self.push_counts[pos]:
            self.doubling_violations += 1
        self.push_counts[pos] += 1
        self.last_push[pos] = length
        if self.push_log is not None:
            self.push_log.append((j, pos, length))

    @property
    def per_position_push_lengths(self) -> Optional[dict[int, list[int]]]:
        if self.push_log is None:
            return None
        out: dict[int, list[int]] = {}
        for _, pos, length in self.push_log:
            out.setdefault(pos, []).append(length)
        return out

    @property
    def stacks(self) -> Optional[dict[int, list[tuple[int, int]]]]:
        """Pushes grouped by reference: ``j -> [(length, pos), ...]``."""
        if self.push_log is None:
            return None
        out: dict[int, list[tuple[int, int]]] = {}
        for j, pos, length in self.push_log:
            out.setdefault(j, []).append((length, pos))
        return out

    def t_max_bound(self) -> int:
        return 1 + math.ceil(math.log2(self.n)) if self.n > 1 else 1

    def check_invariants(self) -> None:
        """Per-position push counts stay logarithmic and push lengths more than double."""
        if self.doubling_violations:
            raise AssertionError(f"{self.doubling_violations} pushes did not double a prior length")
        if self.t_max > self.t_max_bound():
            raise AssertionError(f"t_max={self.t_max} exceeds {self.t_max_bound()} for n={self.n}")

    def csv_row(self) -> tuple:
        return (self.n, self.sigma, self.total_pushes, self.t_max, self.findbeta_calls,
                self.findbeta_successes, self.wall_time_ns, self.backend)


@dataclass
class LufResult:
    luf: np.ndarray
    hook: np.ndarray
    stats: RunStats
    lsf: Optional[LsfArrays] = None
    # positions on which FindHook ran, with the hook it returned
    hooks_found: dict[int, int] = field(default_factory=dict)

    @property
    def mu(self) -> int:
        if not self.luf.size:
            raise ValueError("empty word has no unbordered factor")
        return int(self.luf.max())


def handle_popping(st: ChopStack, q: int, beta, hook) -> None:
    """Pop every entry shorter than ``beta``; each popped position's hook becomes ``q``."""
    while st and st.top_length() < beta:
        _, pos = st.pop()
        hook[pos] = q


def floor_for(j: int, stats: RunStats) -> int:
    """Lengths at or below this bound cannot be cut for ``j``.

    A position last cut with length ``l`` on its parent's stack only sees
    cuts longer than ``2 l`` on its own stack.
    """
    return 2 * int(stats.last_push[j])


def reference_maxima(lsf: LsfArrays) -> np.ndarray:
    """``maxref[j]``: longest successor factor among positions referring to ``j``."""
    maxref = np.zeros(lsf.n, dtype=np.int32)
    has = lsf.ref_array >= 0
    np.maximum.at(maxref, lsf.ref_array[has], lsf.length[has])
    return maxref


def is_potential_reference(i: int, luf_i: int, maxref) -> bool:
    return maxref[i] > 0 and maxref[i] >= luf_i


class HookState:
    """Mutable state shared by the FindHook calls of one run."""

    def __init__(self, n: int, stats: RunStats, luf=None, floors: bool = True,
                 cap: bool = True, check: bool = False):
        self.hook = list(range(n))
        self.stack = ChopStack(check=check)
        self.stats = stats
        self.luf = luf
        self.floors = floors
        self.cap = cap


def find_hook(j: int, state: HookState, backend) -> int:
    hook, st, stats = state.hook, state.stack, state.stats
    stats.findhook_calls += 1
    st.clear()
    floor = floor_for(j, stats) if state.floors else 0
    limit = int(state.luf[j]) if state.cap and state.luf is not None else None

    def beta_at(q):
        stats.findbeta_calls += 1
        b = backend.find_beta(q, j, floor, limit)
        if b:
            stats.findbeta_successes += 1
        return b

    q = hook[j]
    beta = beta_at(q)
    while beta:
        handle_popping(st, q, beta, hook)
        p = q - beta
        st.push(beta, p)
        stats.record_push(j, p, beta)
        q = hook[p]
        beta = beta_at(q)
    handle_popping(st, q, math.inf, hook)
    return q


def _compute_luf_py(w: Word, lsf: LsfArrays, backend, stats: RunStats, floors: bool,
                    cap: bool, check: bool) -> tuple[list[int], list[int], dict[int, int]]:
    n = w.n
    length = lsf.length.tolist()
    ref = lsf.ref_array.tolist()
    maxref = reference_maxima(lsf).tolist()
    luf = [0] * n
    state = HookState(n, stats, luf, floors, cap, check)
    hook = state.hook
    found = {}
    for i in range(n - 1, -1, -1):
        if length[i] == 0:
            luf[i] = n - i
        else:
            j = ref[i]
            if length[i] < luf[j]:
                luf[i] = j + luf[j] - i
            elif i >= hook[j]:
                luf[i] = luf[j]
            else:
                luf[i] = hook[j] - i
        if is_potential_reference(i, luf[i], maxref):
            hook[i] = find_hook(i, state, backend)
            found[i] = hook[i]
    return luf, hook, found


def compute_luf(w, backend="exact", *, seed: int = 0, debug: bool = False,
                floors: bool = True, cap: bool = True, impl: str = "auto",
                lsf: Optional[LsfArrays] = None) -> LufResult:
    """Longest unbordered factor length at every position of ``w``.

    ``backend`` is a name from :data:`lufarray.psq.BACKENDS` or a backend
    object (anything with ``find_beta(q, j, floor, limit)`` and ``word``);
    objects always run on the Python path. ``debug`` keeps the full push log.
    ``floors`` and ``cap`` toggle the search bounds passed to FindBeta
    (lower: twice the last cut length of ``j``; upper: ``LUF[j]``).
    """
    w = as_word(w)
    t0 = time.perf_counter_ns()
    name = backend if isinstance(backend, str) else getattr(backend, "name", "custom")
    if isinstance(backend, str) and backend not in _BACKEND_CODES:
        raise ValueError(f"unknown backend {backend!r}")
    fast = isinstance(backend, str) and _accel.use_ext(impl)
    if lsf is None:
        lsf = compute_lsf(w, impl=impl if isinstance(backend, str) else "auto")
    stats = RunStats(w.n, w.sigma, name, push_log=[] if debug else None)

    if fast:
        b1, b2 = draw_bases(seed)
        out = _accel.kernels.luf_run(w.symbols, lsf.length, lsf.ref_array,
                                     _BACKEND_CODES[backend], b1, b2,
                                     bool(floors), bool(cap), bool(debug))
        luf, hook, counts, last, scalars, log, found = out
        (stats.total_pushes, stats.findbeta_calls, stats.findbeta_successes,
         stats.findhook_calls, stats.false_positives, stats.doubling_violations,
         stats.findbeta_probes) = scalars
        stats.push_counts, stats.last_push = counts, last
        if debug:
            stats.push_log = log
        found = dict(found)
    else:
        if isinstance(backend, str):
            backend = make_backend(w, backend, seed)
        luf, hook, found = _compute_luf_py(w, lsf, backend, stats, floors, cap, debug)
        stats.false_positives = getattr(backend, "false_positives", 0)
        stats.findbeta_probes = getattr(backend, "probes", 0)
        luf = np.asarray(luf, dtype=np.int32)
        hook = np.asarray(hook, dtype=np.int32)
    stats.wall_time_ns = time.perf_counter_ns() - t0
    stats.check_invariants()
    return LufResult(luf, hook, stats, lsf, found)
