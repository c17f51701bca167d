"""Compiled kernels vs the pure-Python fallback.

Times the suffix index, the LSF pass and the full LUF run on random and
worst-case words, and reports FindBeta probe counts: the fingerprint backend
scans each doubling range one length at a time, so probes track the sum of
(beta - floor) rather than a logarithm of it.

    python bench/bench_kernels.py [--repeat 3] [--max-n 100000] [--out FILE]
"""

import argparse
import csv
import math
import sys
import time

from lufarray import HAVE_EXT, build_suffix_index, compute_lsf, compute_luf, gen_random, gen_worstcase

FIELDS = ("instance", "n", "stage", "impl", "best_ms", "speedup", "total_pushes",
          "findbeta_calls", "findbeta_probes", "probes_per_push", "push_ratio")


def best_of(fn, repeat):
    best = math.inf
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(max_n):
    n = 1000
    while n <= max_n:
        yield f"random:n={n}:sigma=2", gen_random(n, 2, n)
        n *= 10
    for t in (8, 10, 12):
        w = gen_worstcase(t)
        if w.n <= max_n:
            yield f"worstcase:t={t}", w


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=100_000)
    ap.add_argument("--backend", default="fingerprint")
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    impls = ["ext", "py"] if HAVE_EXT else ["py"]
    if not HAVE_EXT:
        print("compiled kernels not built; timing the fallback only", file=sys.stderr)

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    wr = csv.DictWriter(out, FIELDS, lineterminator="\n")
    wr.writeheader()
    for name, w in cases(args.max_n):
        stages = {
            "suffix_index": lambda impl: build_suffix_index(w, impl),
            "lsf": lambda impl: compute_lsf(w, impl),
            "luf": lambda impl: compute_luf(w, args.backend, impl=impl),
        }
        for stage, fn in stages.items():
            timings = {}
            for impl in impls:
                timings[impl], res = best_of(lambda: fn(impl), args.repeat)
                row = dict(instance=name, n=w.n, stage=stage, impl=impl,
                           best_ms=f"{timings[impl] * 1e3:.3f}")
                if impl == "py" and "ext" in timings:
                    row["speedup"] = f"{timings['py'] / timings['ext']:.1f}"
                if stage == "luf":
                    st = res.stats
                    row.update(total_pushes=st.total_pushes, findbeta_calls=st.findbeta_calls,
                               findbeta_probes=st.findbeta_probes,
                               probes_per_push=f"{st.findbeta_probes / max(st.total_pushes, 1):.2f}",
                               push_ratio=f"{st.total_pushes / (w.n * math.log2(w.n)):.4f}")
                wr.writerow(row)
                out.flush()
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
