import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from benfordlab.cli import run_cli

GOLDEN = Path(__file__).parent / "golden"


def run(args):
    return run_cli(args)


# ---------------------------------------------------------------------------
# law


def test_law_table(tmp_path, capsys):
    assert run(["law", "--base", "10", "--position", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert len(lines) == 9
    expected = [0.3010, 0.1761, 0.1249, 0.0969, 0.0792, 0.0669, 0.0580, 0.0512, 0.0458]
    for line, d, p in zip(lines, range(1, 10), expected):
        digit, prob = line.split()
        assert int(digit) == d
        assert abs(float(prob) - p) < 5e-5


def test_law_golden_bytes(tmp_path):
    out = tmp_path / "law.txt"
    assert run(["law", "--base", "10", "--position", "1", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "law_base10_pos1.txt").read_bytes()


def test_law_json(tmp_path):
    out = tmp_path / "law.json"
    assert run(["law", "--base", "8", "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["base"] == 8
    assert abs(sum(payload["probabilities"].values()) - 1.0) < 1e-12


# ---------------------------------------------------------------------------
# gen


def test_gen_deterministic_bytes(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["gen", "--kind", "power", "--a", "10", "--p", "0", "--m", "1",
            "--n", "1000", "--seed", "7"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_power_golden_bytes(tmp_path):
    out = tmp_path / "gen.csv"
    assert run(["gen", "--kind", "power", "--a", "10", "--n", "20",
                "--seed", "7", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "gen_power_n20_seed7.csv").read_bytes()


def test_gen_product_and_geometric(tmp_path):
    out = tmp_path / "prod.csv"
    assert run(["gen", "--kind", "product", "--lo", "1", "--hi", "10",
                "--factors", "5", "--n", "50", "--seed", "3", "--out", str(out)]) == 0
    assert out.read_text().startswith("log10_value\n")
    out2 = tmp_path / "geo.csv"
    assert run(["gen", "--kind", "geometric", "--lo", "2", "--hi", "2",
                "--n", "4", "--seed", "0", "--out", str(out2)]) == 0
    vals = [float(x) for x in out2.read_text().strip().split("\n")[1:]]
    assert vals == pytest.approx([k * math.log10(2) for k in range(1, 5)], abs=1e-12)


def test_gen_usage_errors():
    assert run(["gen", "--kind", "power", "--n", "10"]) == 2  # missing --a
    assert run(["gen", "--kind", "power", "--a", "1.0", "--n", "10"]) == 2
    assert run(["gen", "--kind", "product", "--n", "10"]) == 2


# ---------------------------------------------------------------------------
# analyze


def _gen_sample(tmp_path, n=100_000, seed=11) -> Path:
    path = tmp_path / "sample.csv"
    assert run(["gen", "--kind", "power", "--a", "10", "--n", str(n),
                "--seed", str(seed), "--out", str(path)]) == 0
    return path


def test_gen_analyze_pipeline_deterministic(tmp_path):
    sample = _gen_sample(tmp_path)
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    assert run(["analyze", str(sample), "--out", str(r1)]) == 0
    assert run(["analyze", str(sample), "--out", str(r2)]) == 0
    assert r1.read_bytes() == r2.read_bytes()
    payload = json.loads(r1.read_text())
    assert payload["verdict"] == "conforming"
    assert payload["sample_size"] == 100_000


def test_analyze_detects_log10_column(tmp_path):
    # default column 0 is named log10_value, so no cleaning pass runs:
    # negative logs stay negative instead of being folded
    path = tmp_path / "logs.csv"
    path.write_text("log10_value\n-0.5\n-1.5\n0.25\n")
    out = tmp_path / "r.json"
    assert run(["analyze", str(path), "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["decades_spanned"] == pytest.approx(1.75)


def test_analyze_linear_ingestion(tmp_path):
    path = tmp_path / "lin.csv"
    rows = "\n".join(str(float(x)) for x in np.round(10 ** (np.arange(100) * 0.61803 % 3), 4) + 1)
    path.write_text("amount\n" + rows + "\n")
    out = tmp_path / "r.json"
    assert run(["analyze", str(path), "--column", "amount", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["sample_size"] == 100


def test_analyze_golden_bytes(tmp_path):
    sample = tmp_path / "s.csv"
    assert run(["gen", "--kind", "power", "--a", "10", "--n", "1000",
                "--seed", "7", "--out", str(sample)]) == 0
    out = tmp_path / "report.json"
    assert run(["analyze", str(sample), "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "analyze_power_n1000_seed7.json").read_bytes()


def test_analyze_strict_exit_code(tmp_path):
    bad = tmp_path / "bad.csv"
    assert run(["gen", "--kind", "geometric", "--lo", "10", "--hi", "10",
                "--n", "1000", "--seed", "1", "--out", str(bad)]) == 0
    assert run(["analyze", str(bad)]) == 0
    assert run(["analyze", str(bad), "--strict"]) == 1


def test_analyze_plot_data(tmp_path):
    sample = _gen_sample(tmp_path, n=1000, seed=5)
    plot = tmp_path / "plot.csv"
    assert run(["analyze", str(sample), "--plot-data", str(plot),
                "--out", str(tmp_path / "r.json")]) == 0
    lines = plot.read_text().strip().split("\n")
    assert lines[0] == "digit,expected,observed"
    assert len(lines) == 10


def test_analyze_io_errors(tmp_path):
    assert run(["analyze", str(tmp_path / "missing.csv")]) == 3
    empty = tmp_path / "empty.csv"
    empty.write_text("x\n0\n")
    assert run(["analyze", str(empty)]) == 3


def test_unwritable_output_is_io_error(tmp_path):
    sample = _gen_sample(tmp_path, n=100, seed=2)
    bad_out = tmp_path / "no_such_dir" / "r.json"
    assert run(["analyze", str(sample), "--out", str(bad_out)]) == 3


def test_analyze_via_stdin(tmp_path):
    sample = _gen_sample(tmp_path, n=1000, seed=5)
    proc = subprocess.run(
        [sys.executable, "-m", "benfordlab", "analyze", "-", "--format", "json"],
        input=sample.read_text(),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sample_size"] == 1000


def test_usage_error_exit_code():
    assert run(["analyze"]) == 2  # missing path
    assert run(["nonsense"]) == 2


# ---------------------------------------------------------------------------
# mantissa


def test_mantissa_histogram_output(tmp_path):
    sample = _gen_sample(tmp_path, n=2000, seed=8)
    out = tmp_path / "m.json"
    assert run(["mantissa", str(sample), "--bins", "10", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["bin_count"] == 10
    assert sum(payload["counts"]) == payload["total"] == 2000


def test_mantissa_golden_bytes(tmp_path):
    sample = tmp_path / "s.csv"
    assert run(["gen", "--kind", "power", "--a", "10", "--n", "100",
                "--seed", "7", "--out", str(sample)]) == 0
    out = tmp_path / "m.txt"
    assert run(["mantissa", str(sample), "--bins", "5", "--format", "text",
                "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "mantissa_power_n100_seed7.txt").read_bytes()


# ---------------------------------------------------------------------------
# reproduce


def test_reproduce_single_claims(tmp_path, capsys):
    assert run(["reproduce", "--claim", "table1", "--claim", "deep_digit_uniformity"]) == 0
    out = capsys.readouterr().out
    assert "table1: PASS" in out
    assert "deep_digit_uniformity: PASS" in out


def test_reproduce_instant_claims_golden(tmp_path):
    out = tmp_path / "claims.json"
    args = ["reproduce", "--claim", "table1", "--claim", "sigma_flatness",
            "--claim", "deep_digit_uniformity", "--out", str(out)]
    assert run(args) == 0
    assert out.read_bytes() == (GOLDEN / "reproduce_instant.json").read_bytes()


def test_reproduce_unknown_claim():
    assert run(["reproduce", "--claim", "bogus"]) == 2
