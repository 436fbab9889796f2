"""benfordlab: exact Benford digit laws, generators, and conformance tests.

Samples live in log10 domain throughout (a float64 array of base-10
logarithms stands in for a list of positive numbers), which keeps digit
extraction exact across arbitrarily many decades.
"""
from ._backend import get_backend, set_backend
from .analysis import (
    ConformanceReport,
    DigitHistogram,
    MantissaHistogram,
    chi_square_critical,
    chi_square_stat,
    conformance_report,
    decades_spanned,
    digit_histogram,
    ks_uniform_mantissa,
    mad_stat,
    mantissa_histogram,
)
from .dataio import (
    Dataset,
    emit_report,
    ingest,
    read_sample_file,
    write_sample_file,
)
from .digitlaw import (
    MAX_POSITION,
    DigitLawSpec,
    DigitPmf,
    MantissaDecomposition,
    benford_pmf,
    decompose_log,
    digits_of_values,
    nth_digit_from_log,
    wrapped_gaussian_density,
    wrapped_gaussian_flatness,
)
from .errors import (
    BenfordError,
    ColumnMissingError,
    DomainError,
    FileUnreadableError,
    IngestError,
    NoUsableValuesError,
    SpecificationError,
)
from .generators import (
    DerivedLogMoments,
    ExponentIntervalSpec,
    GeometricSeqSpec,
    ProductSpec,
    SourceDistribution,
    derive_log_moments,
    gen_geometric_sequence,
    gen_power_sequence,
    gen_product_samples,
    scale_sequence,
)
from .reproduce import CLAIM_IDS, ReproduceClaim, run_claim, run_claims

__version__ = "0.1.0"

__all__ = [
    "BenfordError",
    "CLAIM_IDS",
    "ColumnMissingError",
    "ConformanceReport",
    "Dataset",
    "DerivedLogMoments",
    "DigitHistogram",
    "DigitLawSpec",
    "DigitPmf",
    "DomainError",
    "ExponentIntervalSpec",
    "FileUnreadableError",
    "GeometricSeqSpec",
    "IngestError",
    "MantissaDecomposition",
    "MantissaHistogram",
    "MAX_POSITION",
    "NoUsableValuesError",
    "ProductSpec",
    "ReproduceClaim",
    "SourceDistribution",
    "SpecificationError",
    "benford_pmf",
    "chi_square_critical",
    "chi_square_stat",
    "conformance_report",
    "decades_spanned",
    "decompose_log",
    "derive_log_moments",
    "digit_histogram",
    "digits_of_values",
    "emit_report",
    "gen_geometric_sequence",
    "gen_power_sequence",
    "gen_product_samples",
    "get_backend",
    "ingest",
    "ks_uniform_mantissa",
    "mad_stat",
    "mantissa_histogram",
    "nth_digit_from_log",
    "read_sample_file",
    "run_claim",
    "run_claims",
    "scale_sequence",
    "set_backend",
    "wrapped_gaussian_density",
    "wrapped_gaussian_flatness",
    "write_sample_file",
]
