"""Command-line front end.

    benford law        print exact digit probabilities
    benford gen        generate a sample file (log10 CSV)
    benford analyze    conformance report for a dataset or sample file
    benford mantissa   mantissa histogram for a dataset or sample file
    benford reproduce  rerun the built-in claim suite

Exit codes: 0 success, 1 non-conforming verdict or failed claim under
--strict, 2 usage error, 3 input/output error.
"""
import argparse
import io
import json
import math
import sys

from . import dataio
from .analysis import conformance_report, mantissa_histogram
from .digitlaw import DigitLawSpec, benford_pmf
from .errors import BenfordError, DomainError, IngestError, SpecificationError
from .generators import (
    ExponentIntervalSpec,
    GeometricSeqSpec,
    ProductSpec,
    SourceDistribution,
    gen_geometric_sequence,
    gen_power_sequence,
    gen_product_samples,
)
from .reproduce import CLAIM_IDS, DESCRIPTIONS, claims_to_json, run_claims

EXIT_OK = 0
EXIT_NON_CONFORMING = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _add_law_flags(parser):
    parser.add_argument("--base", type=int, default=10, help="number base K (default 10)")
    parser.add_argument("--position", type=int, default=1,
                        help="digit position, 1 = leading (default 1)")


def _add_input_flags(parser):
    parser.add_argument("path", help="input file, or - for stdin")
    parser.add_argument("--column", default="0",
                        help="column name or 0-based index (default 0)")
    parser.add_argument("--input-format", choices=("csv", "json_lines"), default=None,
                        help="input layout (default: by file suffix, csv otherwise)")
    parser.add_argument("--log10", action="store_true",
                        help="column already holds base-10 logs (auto-detected for "
                             f"columns named {dataio.SAMPLE_COLUMN!r})")


def _add_output_flags(parser, formats=("json", "text")):
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--format", choices=formats, default=formats[0],
                        help=f"output format (default {formats[0]})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benford",
        description="Exact Benford digit laws, sequence generators, and conformance tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_law = sub.add_parser("law", help="print the exact digit pmf")
    _add_law_flags(p_law)
    _add_output_flags(p_law, formats=("text", "json"))
    p_law.set_defaults(func=_cmd_law)

    p_gen = sub.add_parser("gen", help="generate a log10 sample file")
    p_gen.add_argument("--kind", choices=("power", "product", "geometric"), required=True)
    p_gen.add_argument("--n", type=int, required=True,
                       help="sample count (sequence length for geometric)")
    p_gen.add_argument("--seed", type=int, default=0, help="64-bit stream seed")
    p_gen.add_argument("--out", default=None, help="output path (default stdout)")
    p_gen.add_argument("--base", type=int, default=10,
                       help="number base K aligning the power interval (default 10)")
    p_gen.add_argument("--a", type=float, default=None, help="power kind: base a of a**R")
    p_gen.add_argument("--p", type=int, default=0, help="power kind: decade offset P")
    p_gen.add_argument("--m", type=int, default=1, help="power kind: interval width multiplier M")
    p_gen.add_argument("--lo", type=float, default=None, help="source interval lower endpoint")
    p_gen.add_argument("--hi", type=float, default=None, help="source interval upper endpoint")
    p_gen.add_argument("--values", default=None,
                       help="product kind: comma-separated explicit source values")
    p_gen.add_argument("--factors", type=int, default=1, help="product kind: factors per sample M")
    p_gen.add_argument("--mode", choices=("fresh_factors", "cumulative"),
                       default="fresh_factors", help="geometric kind: factor reuse mode")
    p_gen.set_defaults(func=_cmd_gen)

    p_an = sub.add_parser("analyze", help="conformance report for a numeric dataset")
    _add_input_flags(p_an)
    _add_law_flags(p_an)
    p_an.add_argument("--alpha", type=float, default=0.01,
                      help="chi-square significance level (default 0.01)")
    p_an.add_argument("--strict", action="store_true",
                      help="exit 1 when the verdict is non_conforming")
    p_an.add_argument("--plot-data", default=None,
                      help="also write digit,expected,observed CSV here")
    _add_output_flags(p_an)
    p_an.set_defaults(func=_cmd_analyze)

    p_man = sub.add_parser("mantissa", help="mantissa histogram of a dataset")
    _add_input_flags(p_man)
    p_man.add_argument("--bins", type=int, default=20, help="bin count (default 20)")
    _add_output_flags(p_man)
    p_man.set_defaults(func=_cmd_mantissa)

    p_rep = sub.add_parser("reproduce", help="rerun the built-in claim suite")
    p_rep.add_argument("--claim", action="append", choices=CLAIM_IDS, default=None,
                       help="run only this claim (repeatable; default: all)")
    p_rep.add_argument("--out", default=None, help="write claim results as JSON here")
    p_rep.add_argument("--strict", action="store_true",
                       help="exit 1 when any claim fails")
    p_rep.set_defaults(func=_cmd_reproduce)

    return parser


def _cmd_law(args) -> int:
    pmf = benford_pmf(DigitLawSpec(base=args.base, position=args.position))
    if args.format == "json":
        payload = json.dumps(
            {
                "base": args.base,
                "position": args.position,
                "probabilities": {str(d): float(p) for d, p in pmf.as_dict().items()},
            },
            indent=2,
        ) + "\n"
    else:
        payload = "".join(f"{int(d)} {p:.4f}\n" for d, p in zip(pmf.digits, pmf.probs))
    dataio._write_payload(payload, args.out)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "power":
        if args.a is None:
            raise SpecificationError("gen --kind power requires --a")
        spec = ExponentIntervalSpec(a=args.a, p=args.p, m_intervals=args.m,
                                    number_base=args.base)
        values = gen_power_sequence(spec, args.n, args.seed)
    elif args.kind == "product":
        if args.values is not None:
            source = SourceDistribution.from_values(
                float(v) for v in args.values.split(",") if v.strip()
            )
        elif args.lo is not None and args.hi is not None:
            source = SourceDistribution.uniform(args.lo, args.hi)
        else:
            raise SpecificationError(
                "gen --kind product requires --lo/--hi or --values"
            )
        spec = ProductSpec(source=source, num_factors=args.factors,
                           num_samples=args.n, seed=args.seed)
        values = gen_product_samples(spec)
    else:
        if args.lo is None or args.hi is None:
            raise SpecificationError("gen --kind geometric requires --lo and --hi")
        spec = GeometricSeqSpec(interval_lo=args.lo, interval_hi=args.hi,
                                length=args.n, seed=args.seed, mode=args.mode)
        values = gen_geometric_sequence(spec)
    dataio.write_sample_file(values, args.out if args.out is not None else "-")
    return EXIT_OK


def _materialize_stdin(path):
    return io.StringIO(sys.stdin.read()) if path == "-" else path


def _column_is_log10(source, column, fmt) -> bool:
    if fmt == "json_lines":
        return str(column) == dataio.SAMPLE_COLUMN
    try:
        header = dataio.peek_csv_header(source)
        idx = dataio._resolve_column(column, header)
    except BenfordError:
        return False  # let the real loader raise the precise error
    return header[idx] == dataio.SAMPLE_COLUMN


def _load_values(args):
    """Values for analysis, plus the Dataset when a cleaning pass ran."""
    source = _materialize_stdin(args.path)
    fmt = args.input_format
    if fmt is None:
        low = str(args.path).lower()
        fmt = "json_lines" if low.endswith((".jsonl", ".ndjson")) else "csv"
    if args.log10 or _column_is_log10(source, args.column, fmt):
        return dataio.read_log_column(source, args.column, fmt), None
    dataset = dataio.ingest(source, args.column, fmt, name=str(args.path))
    return dataset.values, dataset


def _cmd_analyze(args) -> int:
    values, _ = _load_values(args)
    spec = DigitLawSpec(base=args.base, position=args.position)
    report = conformance_report(values, spec, args.alpha)
    dataio.emit_report(report, args.format, args.out)
    if args.plot_data is not None:
        dataio.write_plot_data(report, args.plot_data)
    if args.strict and report.verdict == "non_conforming":
        return EXIT_NON_CONFORMING
    return EXIT_OK


def _cmd_mantissa(args) -> int:
    values, _ = _load_values(args)
    hist = mantissa_histogram(values, args.bins)
    if args.format == "json":
        payload = dataio.mantissa_hist_to_json(hist)
    else:
        payload = dataio.mantissa_hist_to_text(hist)
    dataio._write_payload(payload, args.out)
    return EXIT_OK


def _format_scalar(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _cmd_reproduce(args) -> int:
    claims = run_claims(args.claim)
    for claim in claims:
        print(f"{claim.id}: {claim.status.upper()}  {DESCRIPTIONS[claim.id]}")
        scalars = {k: v for k, v in claim.details.items() if not isinstance(v, (list, dict))}
        if scalars:
            print("    " + "  ".join(f"{k}={_format_scalar(v)}" for k, v in scalars.items()))
        for case in claim.details.get("cases", []):
            print("    case " + "  ".join(f"{k}={_format_scalar(v)}" for k, v in case.items()))
    if args.out is not None:
        dataio._write_payload(claims_to_json(claims), args.out)
    if args.strict and any(c.status != "pass" for c in claims):
        return EXIT_NON_CONFORMING
    return EXIT_OK


def run_cli(argv=None) -> int:
    """Parse argv and run one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return int(code)
    try:
        return args.func(args)
    except IngestError as exc:
        print(f"benford: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SpecificationError, DomainError) as exc:
        print(f"benford: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BenfordError as exc:
        print(f"benford: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO


def console_entry() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    console_entry()
