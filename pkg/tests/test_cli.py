import csv
import io
import json
import subprocess
import sys

import pytest

from lufarray import cli

from conftest import EXAMPLE, EXAMPLE_LSF_LEN, EXAMPLE_LSF_REF, EXAMPLE_LUF


@pytest.fixture
def word_file(tmp_path):
    p = tmp_path / "w.txt"
    p.write_text(EXAMPLE + "\n")
    return p


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys, word_file):
    code, out, _ = run(capsys, "compute", word_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("|")[1].split() == [str(i) for i in range(1, 21)]
    assert lines[1].split("|")[1].split() == list(EXAMPLE)
    assert lines[2].split("|")[1].split() == [str(v) for v in EXAMPLE_LUF]
    assert lines[-1] == "mu = 20"


def test_compute_arrays_shows_nil(capsys, word_file):
    code, out, _ = run(capsys, "compute", word_file, "--arrays", "--backend", "exact")
    rows = {ln.split("|")[0].strip(): ln.split("|")[1].split() for ln in out.splitlines() if "|" in ln}
    assert rows["LSF_l[i]"] == [str(v) for v in EXAMPLE_LSF_LEN]
    assert rows["LSF_r[i]"] == ["nil" if v is None else str(v) for v in EXAMPLE_LSF_REF]
    assert rows["HOOK[i]"][17] == "13"


def test_compute_json(capsys, word_file):
    code, out, _ = run(capsys, "compute", word_file, "--format", "json", "--arrays", "--stats")
    doc = json.loads(out)
    assert doc["luf"] == EXAMPLE_LUF and doc["mu"] == 20
    assert doc["lsf_ref"][-2:] == [None, None]
    assert doc["stats"]["n"] == 20


def test_compute_csv(capsys, word_file, tmp_path):
    out_path = tmp_path / "o.csv"
    code, _, _ = run(capsys, "compute", word_file, "--format", "csv", "--out", out_path)
    rows = list(csv.reader(out_path.open()))
    assert rows[0] == ["i", "symbol", "luf"]
    assert [int(r[2]) for r in rows[1:]] == EXAMPLE_LUF


def test_compute_factors(capsys, word_file):
    _, out, _ = run(capsys, "compute", word_file, "--factors")
    assert "18\t2\tba" in out.splitlines()


def test_raw_keeps_newline(capsys, word_file):
    _, out, _ = run(capsys, "compute", word_file, "--raw", "--format", "json")
    assert len(json.loads(out)["luf"]) == 21


def test_tokens_agree_with_bytes(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text(" ".join(str(ord(c)) for c in EXAMPLE))
    _, out, _ = run(capsys, "compute", p, "--tokens", "--format", "json")
    assert json.loads(out)["luf"] == EXAMPLE_LUF


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"abc\n")))
    _, out, _ = run(capsys, "compute", "-", "--format", "json")
    assert json.loads(out)["luf"] == [3, 2, 1]


def test_empty_input(capsys, tmp_path):
    p = tmp_path / "e.txt"
    p.write_text("")
    code, out, _ = run(capsys, "compute", p, "--format", "json")
    assert code == 0 and json.loads(out) == {"luf": [], "mu": None}


def test_errors(capsys, tmp_path):
    code, _, err = run(capsys, "compute", tmp_path / "missing.txt")
    assert code == 2 and "cannot read" in err
    p = tmp_path / "bad.txt"
    p.write_text("1 x 2")
    code, _, err = run(capsys, "compute", p, "--tokens")
    assert code == 2 and "integers" in err
    with pytest.raises(SystemExit):
        cli.main(["compute", "--backend", "nope"])


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 60, "--n-max", 64)
    assert code == 0 and out.strip().endswith("60 cases, 0 mismatches")


def test_verify_reports_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 200, "--n-max", 64, "--inject-fault",
                       "--backend", "exact", "--no-hooks")
    assert code == 1
    assert "mismatch (" in out and "seed=" in out


def test_bench_worstcase(capsys):
    code, out, _ = run(capsys, "bench", "--t", "3:5", "--backend", "exact")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == list(cli.BENCH_HEADER)
    assert [int(r["t_max"]) for r in rows] == [3, 4, 5]
    assert [r["instance"] for r in rows] == ["worstcase:t=3", "worstcase:t=4", "worstcase:t=5"]


def test_bench_random(capsys):
    code, out, _ = run(capsys, "bench", "--family", "random", "--n", "100,200")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == [100, 200]


def test_gen(capsys):
    _, out, _ = run(capsys, "gen", "worstcase", "--t", 3)
    assert out == "aabaabb" * 2 + "\n"
    _, out, _ = run(capsys, "gen", "random", "--n", 16, "--sigma", 2, "--seed", 42, "--tokens")
    assert out.split() == "1 2 2 1 1 2 1 2 1 1 2 2 2 2 2 2".split()
    code, _, err = run(capsys, "gen", "worstcase", "--t", 1)
    assert code == 2 and "t" in err


def test_module_entry_point(word_file):
    proc = subprocess.run([sys.executable, "-m", "lufarray", "compute", str(word_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "mu = 20"
