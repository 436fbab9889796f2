"""Dataset ingestion, sample-file round trip, and report serialization.

Raw datasets are cleaned on the way in: negative entries are folded to
their absolute values (a sign never changes digits), zeros and non-finite
or unparseable entries are dropped, and everything is stored as log10.
Generated samples travel between commands as a single-column CSV with
header ``log10_value`` so magnitudes spanning thousands of decades survive
serialization exactly (floats are written with shortest round-trip repr).
"""
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .analysis import ConformanceReport, MantissaHistogram
from .errors import (
    ColumnMissingError,
    DomainError,
    FileUnreadableError,
    NoUsableValuesError,
)

SAMPLE_COLUMN = "log10_value"


@dataclass(frozen=True)
class Dataset:
    """Cleaned numeric dataset in log10 domain, with cleaning tallies."""

    name: str
    values: np.ndarray
    dropped_zero_count: int
    dropped_nonfinite_count: int
    negatives_folded_count: int

    @property
    def row_count(self) -> int:
        return int(self.values.size) + self.dropped_zero_count + self.dropped_nonfinite_count


def _open_text(source):
    # a StringIO-like buffer can be re-read any number of times
    if hasattr(source, "getvalue"):
        return io.StringIO(source.getvalue())
    if source == "-":
        return io.StringIO(sys.stdin.read())
    try:
        return open(source, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise FileUnreadableError(f"cannot read {source!r}: {exc}") from exc


def peek_csv_header(source) -> list[str]:
    """First row of a CSV source, without consuming a file-like buffer."""
    with _open_text(source) as fh:
        try:
            return next(csv.reader(fh))
        except (StopIteration, csv.Error) as exc:
            raise FileUnreadableError("input is empty or not parseable as CSV") from exc


def _resolve_column(column, header: list[str]) -> int:
    if isinstance(column, int) and not isinstance(column, bool):
        idx = column
    else:
        name = str(column)
        if name in header:
            return header.index(name)
        try:
            idx = int(name)
        except ValueError:
            raise ColumnMissingError(
                f"column {column!r} not found; header is {header}"
            ) from None
    if not 0 <= idx < len(header):
        raise ColumnMissingError(
            f"column index {idx} out of range; header has {len(header)} columns"
        )
    return idx


def _iter_csv_cells(fh, column):
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except (StopIteration, csv.Error) as exc:
        raise FileUnreadableError("input is empty or not parseable as CSV") from exc
    idx = _resolve_column(column, header)
    for row in reader:
        if not row:
            continue
        yield row[idx] if idx < len(row) else None


def _iter_jsonl_cells(fh, column):
    key = str(column)
    saw_key = False
    for line in fh:
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FileUnreadableError(f"bad JSON line: {exc}") from exc
        if key in obj:
            saw_key = True
            yield obj[key]
        else:
            yield None
    if not saw_key:
        raise ColumnMissingError(f"field {key!r} not present in any JSON line")


def ingest(path, column=0, fmt: str | None = None, name: str | None = None) -> Dataset:
    """Load one numeric column and clean it into a log10 Dataset.

    fmt is "csv" or "json_lines"; None infers json_lines from a
    .jsonl/.ndjson suffix and defaults to csv otherwise.  Every data row
    ends up in exactly one bucket: usable (negatives folded), dropped
    zero, or dropped non-finite/unparseable.
    """
    if fmt is None:
        low = str(path).lower()
        fmt = "json_lines" if low.endswith((".jsonl", ".ndjson")) else "csv"
    if fmt not in ("csv", "json_lines"):
        raise DomainError(f"unknown input format {fmt!r}")
    magnitudes = []
    zeros = 0
    nonfinite = 0
    folded = 0
    with _open_text(path) as fh:
        cells = _iter_csv_cells(fh, column) if fmt == "csv" else _iter_jsonl_cells(fh, column)
        for cell in cells:
            try:
                x = float(cell)
            except (TypeError, ValueError):
                nonfinite += 1
                continue
            if not math.isfinite(x):
                nonfinite += 1
            elif x == 0.0:
                zeros += 1
            else:
                if x < 0.0:
                    folded += 1
                    x = -x
                magnitudes.append(x)
    if not magnitudes:
        raise NoUsableValuesError(
            f"no usable values in {path!r} (zeros dropped: {zeros}, non-finite dropped: {nonfinite})"
        )
    values = np.log10(np.asarray(magnitudes, dtype=np.float64))
    return Dataset(
        name=name if name is not None else str(path),
        values=values,
        dropped_zero_count=zeros,
        dropped_nonfinite_count=nonfinite,
        negatives_folded_count=folded,
    )


def write_sample_file(values, out) -> None:
    """Write log10 values as the single-column sample CSV."""
    close = False
    if isinstance(out, (str,)):
        if out == "-":
            fh = sys.stdout
        else:
            fh = open(out, "w", encoding="utf-8", newline="")
            close = True
    else:
        fh = out
    try:
        fh.write(SAMPLE_COLUMN + "\n")
        for v in np.asarray(values, dtype=np.float64):
            fh.write(repr(float(v)) + "\n")
    finally:
        if close:
            fh.close()


def read_log_column(source, column=SAMPLE_COLUMN, fmt: str | None = None) -> np.ndarray:
    """Read a column of already-log10 values, exactly as written.

    Log-domain files are machine artifacts, so anything unparseable or
    non-finite is an error rather than a cleaning statistic.
    """
    if fmt is None:
        low = str(source).lower()
        fmt = "json_lines" if low.endswith((".jsonl", ".ndjson")) else "csv"
    values = []
    with _open_text(source) as fh:
        cells = _iter_csv_cells(fh, column) if fmt == "csv" else _iter_jsonl_cells(fh, column)
        for cell in cells:
            try:
                v = float(cell)
            except (TypeError, ValueError):
                raise FileUnreadableError(f"bad log10 value {cell!r}") from None
            if not math.isfinite(v):
                raise FileUnreadableError(f"log10 values must be finite, got {cell!r}")
            values.append(v)
    if not values:
        raise NoUsableValuesError("log10 column holds no values")
    return np.asarray(values, dtype=np.float64)


def read_sample_file(source) -> np.ndarray:
    """Read a single-column sample CSV back into a log10 array."""
    return read_log_column(source, SAMPLE_COLUMN, "csv")


def report_to_dict(report: ConformanceReport) -> dict:
    """Report as a plain dict with the fixed serialization schema."""
    digits = report.spec.digits
    return {
        "sample_size": report.sample_size,
        "base": report.spec.base,
        "position": report.spec.position,
        "observed": {str(int(d)): float(f) for d, f in zip(digits, report.observed)},
        "expected": {str(int(d)): float(p) for d, p in zip(digits, report.expected)},
        "chi_square": report.chi_square,
        "chi_square_critical": report.chi_square_critical,
        "mad": report.mad,
        "ks_mantissa": report.ks_mantissa,
        "decades_spanned": report.decades_spanned,
        "verdict": report.verdict,
    }


def report_to_json(report: ConformanceReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def report_to_text(report: ConformanceReport) -> str:
    lines = [f"{'digit':>7} {'observed':>12} {'expected':>12}"]
    for d, obs, exp in zip(report.spec.digits, report.observed, report.expected):
        lines.append(f"{int(d):>7} {obs:>12.6f} {exp:>12.6f}")
    lines.append("")
    stats = [
        ("sample_size", f"{report.sample_size}"),
        ("base", f"{report.spec.base}"),
        ("position", f"{report.spec.position}"),
        ("chi_square", f"{report.chi_square:.6g}"),
        ("chi_square_critical", f"{report.chi_square_critical:.6g}"),
        ("mad", f"{report.mad:.6g}"),
        ("ks_mantissa", f"{report.ks_mantissa:.6g}"),
        ("decades_spanned", f"{report.decades_spanned:.6g}"),
    ]
    for key, val in stats:
        lines.append(f"{key:>20} {val:>14}")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines) + "\n"


def emit_report(report: ConformanceReport, fmt: str = "json", out=None) -> None:
    """Serialize a report as JSON or a right-aligned text table."""
    if fmt == "json":
        payload = report_to_json(report)
    elif fmt == "text":
        payload = report_to_text(report)
    else:
        raise DomainError(f"unknown report format {fmt!r}")
    _write_payload(payload, out)


def write_plot_data(report: ConformanceReport, out) -> None:
    """Companion CSV for plotting: one digit,expected,observed row per digit."""
    lines = ["digit,expected,observed"]
    for d, obs, exp in zip(report.spec.digits, report.observed, report.expected):
        lines.append(f"{int(d)},{repr(float(exp))},{repr(float(obs))}")
    _write_payload("\n".join(lines) + "\n", out)


def mantissa_hist_to_json(hist: MantissaHistogram) -> str:
    payload = {
        "bin_count": hist.bin_count,
        "total": hist.total,
        "counts": [int(c) for c in hist.counts],
        "frequencies": [float(f) for f in hist.frequencies()],
    }
    return json.dumps(payload, indent=2) + "\n"


def mantissa_hist_to_text(hist: MantissaHistogram) -> str:
    lines = [f"{'bin_lo':>8} {'bin_hi':>8} {'count':>10} {'frequency':>12}"]
    freqs = hist.frequencies()
    for i, (c, f) in enumerate(zip(hist.counts, freqs)):
        lo = i / hist.bin_count
        hi = (i + 1) / hist.bin_count
        lines.append(f"{lo:>8.4f} {hi:>8.4f} {int(c):>10} {f:>12.6f}")
    lines.append(f"total: {hist.total}")
    return "\n".join(lines) + "\n"


def _write_payload(payload: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(payload)
        return
    if isinstance(out, str):
        try:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(payload)
        except OSError as exc:
            raise FileUnreadableError(f"cannot write {out!r}: {exc}") from exc
        return
    out.write(payload)
