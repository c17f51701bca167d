"""Compiled kernels and the pure-Python fallback must agree exactly."""

import random

import numpy as np
import pytest

from lufarray import HAVE_EXT, compute_luf, gen_random, gen_worstcase
from lufarray import _accel, _fallback

pytestmark = pytest.mark.skipif(not HAVE_EXT, reason="compiled kernels not built")


def words():
    for seed in range(400):
        n = random.Random(seed).randrange(0, 300)
        yield gen_random(n, (1, 2, 3, 4, 26)[seed % 5], seed)
    for t in range(2, 9):
        yield gen_worstcase(t)


def test_suffix_structures_agree():
    k = _accel.kernels
    for w in words():
        sa_e, sa_p = k.suffix_array(w.symbols), _fallback.suffix_array(w.symbols)
        assert np.array_equal(sa_e, sa_p)
        r_e, l_e = k.lcp_kasai(w.symbols, sa_e)
        r_p, l_p = _fallback.lcp_kasai(w.symbols, sa_p)
        assert np.array_equal(r_e, r_p) and np.array_equal(l_e, l_p)
        a = k.lsf_from_index(sa_e, r_e, l_e)
        b = _fallback.lsf_from_index(sa_p, r_p, l_p)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


@pytest.mark.parametrize("backend", ["exact", "fingerprint", "fingerprint-paranoid"])
def test_runs_agree(backend):
    for w in words():
        e = compute_luf(w, backend, seed=5, debug=True, impl="ext")
        p = compute_luf(w, backend, seed=5, debug=True, impl="py")
        assert np.array_equal(e.luf, p.luf) and np.array_equal(e.hook, p.hook)
        assert e.hooks_found == p.hooks_found
        se, sp = e.stats, p.stats
        for f in ("total_pushes", "findbeta_calls", "findbeta_successes", "findhook_calls",
                  "false_positives", "doubling_violations", "findbeta_probes"):
            assert getattr(se, f) == getattr(sp, f), f
        assert np.array_equal(se.push_counts, sp.push_counts)
        assert np.array_equal(se.last_push, sp.last_push)
        assert list(se.push_log) == list(sp.push_log)


def test_use_ext_selection(monkeypatch):
    assert _accel.use_ext("auto") and _accel.use_ext("ext") and not _accel.use_ext("py")
    with pytest.raises(ValueError):
        _accel.use_ext("gpu")
    monkeypatch.setattr(_accel, "HAVE_EXT", False)
    with pytest.raises(RuntimeError):
        _accel.use_ext("ext")
    assert not _accel.use_ext("auto")


def test_pure_env_var():
    import subprocess
    import sys
    code = "import lufarray; print(lufarray.HAVE_EXT)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={**__import__("os").environ, "LUFARRAY_PURE": "1"}).stdout
    assert out.strip() == "False"
