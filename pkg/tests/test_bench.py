import csv
import runpy
import sys
from pathlib import Path

SCRIPT = Path(__file__).parent.parent / "bench" / "bench_kernels.py"


def test_bench_script_smoke(tmp_path, monkeypatch):
    out = tmp_path / "bench.csv"
    monkeypatch.setattr(sys, "argv", [str(SCRIPT), "--repeat", "1", "--max-n", "1000",
                                      "--out", str(out)])
    runpy.run_path(str(SCRIPT), run_name="__main__")
    rows = list(csv.DictReader(out.open()))
    luf_rows = [r for r in rows if r["stage"] == "luf"]
    assert luf_rows and all(int(r["findbeta_probes"]) >= int(r["total_pushes"]) for r in luf_rows)
    # both implementations report identical counters
    by_impl = {}
    for r in luf_rows:
        by_impl.setdefault(r["instance"], set()).add((r["total_pushes"], r["findbeta_probes"]))
    assert all(len(v) == 1 for v in by_impl.values())
