"""Command-line front end: ``compute``, ``verify``, ``bench`` and ``gen``.

All positions printed by the CLI are 1-based.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from typing import Optional, Sequence

import numpy as np

from .core import Word, rank_reduce
from .gen import GenSpec, gen_random
from .lsf import lsf_naive
from .luf import CSV_HEADER, compute_luf
from .oracles import hook_naive, luf_naive
from .psq import BACKENDS, make_backend

BENCH_HEADER = ("instance",) + CSV_HEADER + ("push_ratio",)


class InputError(Exception):
    pass


def read_word(source: str, tokens: bool = False, raw: bool = False) -> Word:
    """Read a word from a path (``-`` for stdin).

    Bytes mode uses each byte as a symbol; one trailing newline is dropped
    unless ``raw``. Tokens mode reads whitespace-separated integers.
    """
    try:
        if source == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(source, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from exc
    if tokens:
        try:
            values = [int(tok) for tok in data.split()]
        except ValueError as exc:
            raise InputError(f"tokens mode needs integers: {exc}") from exc
        return rank_reduce(values)
    if not raw:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return rank_reduce(np.frombuffer(data, dtype=np.uint8)) if data else Word([])


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _nil(v):
    return "nil" if v is None else v


def cmd_compute(args) -> int:
    w = read_word(args.input, args.tokens, args.raw)
    res = compute_luf(w, args.backend, seed=args.seed, impl=args.impl)
    luf = res.luf.tolist()
    mu = max(luf) if luf else None
    lsf_len, lsf_ref = res.lsf.rows(one_based=True)
    hook = (res.hook + 1).tolist()
    out, close = _open_out(args.out)
    try:
        if args.format == "json":
            doc = {"luf": luf, "mu": mu}
            if args.arrays:
                doc.update(lsf_len=lsf_len, lsf_ref=lsf_ref, hook=hook)
            if args.stats:
                doc["stats"] = dict(zip(CSV_HEADER, res.stats.csv_row()))
            json.dump(doc, out)
            out.write("\n")
        elif args.format == "csv":
            wr = csv.writer(out, lineterminator="\n")
            header = ["i", "symbol", "luf"]
            if args.arrays:
                header += ["lsf_len", "lsf_ref", "hook"]
            wr.writerow(header)
            for i in range(w.n):
                row = [i + 1, w[i], luf[i]]
                if args.arrays:
                    row += [lsf_len[i], _nil(lsf_ref[i]), hook[i]]
                wr.writerow(row)
        else:
            _write_table(out, w, luf, lsf_len, lsf_ref, hook, args.arrays)
            out.write(f"mu = {mu if mu is not None else 'none'}\n")
            if args.stats:
                out.write(", ".join(f"{k}={v}" for k, v in zip(CSV_HEADER, res.stats.csv_row())) + "\n")
        if args.factors and args.format == "text":
            for i in range(w.n):
                out.write(f"{i + 1}\t{luf[i]}\t{_render(w.seq[i:i + luf[i]])}\n")
    finally:
        if close:
            out.close()
    return 0


def _render(seq) -> str:
    if seq and max(seq) <= 26:
        return "".join(chr(ord("a") + s - 1) for s in seq)
    return " ".join(map(str, seq))


def _write_table(out, w: Word, luf, lsf_len, lsf_ref, hook, arrays: bool) -> None:
    rows = [("i", [str(i + 1) for i in range(w.n)])]
    if w.sigma <= 26:
        rows.append(("w[i]", [chr(ord("a") + s - 1) for s in w.seq]))
    rows.append(("LUF[i]", [str(v) for v in luf]))
    if arrays:
        rows.append(("LSF_l[i]", [str(v) for v in lsf_len]))
        rows.append(("LSF_r[i]", [str(_nil(v)) for v in lsf_ref]))
        rows.append(("HOOK[i]", [str(v) for v in hook]))
    label = max(len(r[0]) for r in rows)
    width = max([len(c) for _, cells in rows for c in cells] or [1])
    for name, cells in rows:
        out.write(name.ljust(label) + " | " + " ".join(c.rjust(width) for c in cells) + "\n")


def verify_case(seed: int, n_max: int, sigmas: Sequence[int], index: int) -> tuple[int, int]:
    sigma = sigmas[index % len(sigmas)]
    n = 1 + random.Random(seed).randrange(n_max)
    return n, sigma


def run_verify(trials: int, n_max: int, sigmas: Sequence[int], seed: int, backend="exact",
               impl: str = "auto", check_hooks: bool = True, log=None) -> int:
    """Fast-vs-oracle equivalence on random words; returns the mismatch count.

    Case ``k`` uses seed ``seed + k``. ``backend`` may be a name or a factory
    ``word -> backend object`` (used to inject faulty backends in tests).
    """
    log = log if log is not None else sys.stdout
    mismatches = 0
    for k in range(trials):
        s = seed + k
        n, sigma = verify_case(s, n_max, sigmas, k)
        w = gen_random(n, sigma, s)
        be = backend if isinstance(backend, str) else backend(w)
        try:
            res = compute_luf(w, be, seed=s, impl=impl)
        except AssertionError:
            res, problems = None, ["invariant"]
        else:
            problems = []
            if res.luf.tolist() != luf_naive(w):
                problems.append("luf")
            if res.lsf != lsf_naive(w):
                problems.append("lsf")
            if check_hooks and any(hook_naive(w, j) != h for j, h in res.hooks_found.items()):
                problems.append("hook")
        if problems:
            mismatches += 1
            log.write(f"mismatch ({','.join(problems)}): seed={s} n={n} sigma={sigma}\n")
    log.write(f"{trials} cases, {mismatches} mismatches\n")
    return mismatches


class _FaultyBackend:
    """Wraps a backend and lengthens every other successful answer by one."""

    name = "faulty"

    def __init__(self, w, inner: str):
        self.inner = make_backend(w, inner)
        self.word = self.inner.word
        self._flip = False

    def find_beta(self, q, j, floor=0, limit=None):
        b = self.inner.find_beta(q, j, floor, limit)
        if b:
            self._flip = not self._flip
            if self._flip and b < q:
                return b + 1
        return b


def cmd_verify(args) -> int:
    sigmas = [int(s) for s in args.sigma.split(",") if s]
    backend = args.backend
    if args.inject_fault:
        backend = lambda w, name=args.backend: _FaultyBackend(w, name)  # noqa: E731
    bad = run_verify(args.trials, args.n_max, sigmas, args.seed, backend, args.impl,
                     check_hooks=not args.no_hooks)
    return 1 if bad else 0


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",") if v]


def bench_rows(specs: Sequence[GenSpec], backend: str, seed: int = 0, impl: str = "auto"):
    for spec in specs:
        w = spec.build()
        res = compute_luf(w, backend, seed=seed, impl=impl)
        st = res.stats
        ratio = st.total_pushes / (w.n * math.log2(w.n)) if w.n > 1 else 0.0
        yield (spec.describe(),) + st.csv_row() + (f"{ratio:.6f}",)


def cmd_bench(args) -> int:
    if args.family == "worstcase":
        specs = [GenSpec("worstcase", t=t) for t in _parse_range(args.t)]
    else:
        specs = [GenSpec("random", n=n, sigma=args.sigma, seed=args.seed + k)
                 for k, n in enumerate(_parse_range(args.n))]
    out, close = _open_out(args.out)
    try:
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(BENCH_HEADER)
        for row in bench_rows(specs, args.backend, args.seed, args.impl):
            wr.writerow(row)
            out.flush()
    finally:
        if close:
            out.close()
    return 0


def cmd_gen(args) -> int:
    if args.family == "worstcase":
        w = GenSpec("worstcase", t=args.t).build()
    else:
        w = GenSpec("random", n=args.n, sigma=args.sigma, seed=args.seed).build()
    out, close = _open_out(args.out)
    try:
        if args.tokens or w.sigma > 26:
            out.write(" ".join(map(str, w.seq)) + "\n")
        else:
            out.write(w.to_text() + "\n")
    finally:
        if close:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "csv", "json"), default="text")
    shared.add_argument("--backend", choices=BACKENDS, default="fingerprint")
    shared.add_argument("--tokens", action="store_true",
                        help="input/output as whitespace-separated integers")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--arrays", action="store_true", help="also print LSF and HOOK arrays")
    shared.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    shared.add_argument("--impl", choices=("auto", "ext", "py"), default="auto",
                        help="compiled kernels, pure Python, or whichever is available")

    p = argparse.ArgumentParser(prog="lufarray", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[shared], help="LUF array of an input word")
    c.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    c.add_argument("--raw", action="store_true", help="keep a trailing newline as a symbol")
    c.add_argument("--stats", action="store_true", help="include run statistics")
    c.add_argument("--factors", action="store_true", help="list each longest unbordered factor")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", parents=[shared], help="compare fast paths with brute force")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--n-max", type=int, default=512)
    v.add_argument("--sigma", default="2,3,4,26", help="comma-separated alphabet sizes")
    v.add_argument("--no-hooks", action="store_true", help="skip the per-reference hook check")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify, seed=1)

    b = sub.add_parser("bench", parents=[shared], help="instrumented runs as CSV rows")
    b.add_argument("--family", choices=("worstcase", "random"), default="worstcase")
    b.add_argument("--t", default="3:16", help="block counts, LO:HI or a comma list")
    b.add_argument("--n", default="1000,10000,100000", help="lengths, LO:HI or a comma list")
    b.add_argument("--sigma", type=int, default=2)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", parents=[shared], help="print a generated word")
    g.add_argument("family", choices=("worstcase", "random"))
    g.add_argument("--t", type=int, default=4)
    g.add_argument("--n", type=int, default=16)
    g.add_argument("--sigma", type=int, default=2)
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"lufarray: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"lufarray: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
