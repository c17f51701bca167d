"""Longest unbordered factor array of a word in O(n log n) stack operations."""

from ._accel import HAVE_EXT
from .borders import border_array, is_unbordered, min_period, unbordered_decomposition
from .core import Word, rank_reduce
from .gen import gen_random, gen_worstcase
from .lsf import LsfArrays, SuffixIndex, build_suffix_index, compute_lsf, lsf_naive
from .luf import LufResult, RunStats, compute_luf
from .oracles import hook_naive, luf_naive, mu
from .psq import FingerprintIndex, factor_eq, find_beta, find_beta_exact, make_backend

__all__ = [
    "HAVE_EXT", "Word", "rank_reduce", "border_array", "is_unbordered", "min_period",
    "unbordered_decomposition", "gen_random", "gen_worstcase", "LsfArrays", "SuffixIndex",
    "build_suffix_index", "compute_lsf", "lsf_naive", "LufResult", "RunStats", "compute_luf",
    "hook_naive", "luf_naive", "mu", "FingerprintIndex", "factor_eq", "find_beta",
    "find_beta_exact", "make_backend",
]
