"""Digit and mantissa statistics over log10-domain samples.

The operational rule: a set of numbers follows the digit law exactly when
the mantissas of their logs are uniform on [0, 1).  The report therefore
carries both sides — digit goodness-of-fit (Pearson chi-square against the
exact pmf, plus MAD) and the mantissa side (KS distance from uniform),
together with the decade span of the sample.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .digitlaw import DigitLawSpec, DigitPmf, benford_pmf, digits_of_values
from .errors import DomainError, SpecificationError
from .special import chi2_sf, chi_square_critical  # noqa: F401  (re-exported)

#: expected-count rule of thumb: below 5 observations per digit bin the
#: chi-square verdict is not meaningful
MIN_COUNT_PER_BIN = 5


def as_log_array(values) -> np.ndarray:
    """Validate and convert a sequence of log10 values to float64."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise DomainError("log10 samples must be one-dimensional")
    if arr.size and not np.all(np.isfinite(arr)):
        raise DomainError("log10 samples must be finite")
    return arr


@dataclass(frozen=True)
class DigitHistogram:
    """Observed digit counts for one DigitLawSpec."""

    spec: DigitLawSpec
    counts: np.ndarray  # aligned with spec.digits
    total: int

    def __post_init__(self):
        if self.counts.shape != (self.spec.num_digits,):
            raise SpecificationError("count vector does not match digit domain")
        if int(self.counts.sum()) != self.total:
            raise SpecificationError("histogram counts must sum to total")

    @property
    def digits(self) -> np.ndarray:
        return self.spec.digits

    def frequencies(self) -> np.ndarray:
        if self.total == 0:
            return np.zeros_like(self.counts, dtype=np.float64)
        return self.counts / self.total

    def as_dict(self) -> dict[int, int]:
        return {int(d): int(c) for d, c in zip(self.digits, self.counts)}


@dataclass(frozen=True)
class MantissaHistogram:
    """Counts of log10 mantissas over equal bins partitioning [0, 1)."""

    bin_count: int
    counts: np.ndarray
    total: int

    def __post_init__(self):
        if self.counts.shape != (self.bin_count,):
            raise SpecificationError("count vector does not match bin count")
        if int(self.counts.sum()) != self.total:
            raise SpecificationError("histogram counts must sum to total")

    def frequencies(self) -> np.ndarray:
        if self.total == 0:
            return np.zeros_like(self.counts, dtype=np.float64)
        return self.counts / self.total


@dataclass(frozen=True)
class ConformanceReport:
    """All conformance statistics for one sample and digit spec."""

    sample_size: int
    spec: DigitLawSpec
    observed: np.ndarray  # frequencies, aligned with spec.digits
    expected: np.ndarray  # exact pmf
    chi_square: float
    chi_square_critical: float
    mad: float
    ks_mantissa: float
    decades_spanned: float
    verdict: str  # conforming | non_conforming | insufficient_data


def digit_histogram(values, spec: DigitLawSpec) -> DigitHistogram:
    """Count the spec's digit over every log10 value."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    digits = digits_of_values(arr, spec)
    first = 1 if spec.position == 1 else 0
    counts = np.bincount(digits - first, minlength=spec.num_digits)
    return DigitHistogram(spec=spec, counts=counts, total=int(arr.size))


def mantissa_histogram(values, bin_count: int = 20) -> MantissaHistogram:
    """Bin the fractional parts of log10 values into equal bins on [0, 1)."""
    if not isinstance(bin_count, int) or bin_count < 2:
        raise SpecificationError(f"bin_count must be an integer >= 2, got {bin_count!r}")
    arr = np.ascontiguousarray(values, dtype=np.float64)
    m = kernels.mantissas(arr)
    idx = np.minimum((m * bin_count).astype(np.int64), bin_count - 1)
    counts = np.bincount(idx, minlength=bin_count)
    return MantissaHistogram(bin_count=bin_count, counts=counts, total=int(arr.size))


def chi_square_stat(hist: DigitHistogram, pmf: DigitPmf) -> float:
    """Pearson statistic: sum over digits of (count - N p)^2 / (N p)."""
    if hist.spec != pmf.spec:
        raise SpecificationError("histogram and pmf describe different digit laws")
    if hist.total <= 0:
        raise DomainError("chi-square statistic needs a non-empty histogram")
    expected = hist.total * pmf.probs
    return float(((hist.counts - expected) ** 2 / expected).sum())


def mad_stat(hist: DigitHistogram, pmf: DigitPmf) -> float:
    """Mean absolute deviation of observed digit frequencies from the pmf."""
    if hist.spec != pmf.spec:
        raise SpecificationError("histogram and pmf describe different digit laws")
    if hist.total <= 0:
        raise DomainError("MAD statistic needs a non-empty histogram")
    return float(np.abs(hist.frequencies() - pmf.probs).mean())


def ks_uniform_mantissa(values) -> float:
    """KS sup-distance between the mantissa empirical CDF and uniform."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.size == 0:
        raise DomainError("KS statistic needs at least one value")
    m = np.sort(kernels.mantissas(arr))
    n = m.size
    steps = np.arange(1, n + 1, dtype=np.float64) / n
    d_plus = float(np.max(steps - m))
    d_minus = float(np.max(m - (steps - 1.0 / n)))
    return max(d_plus, d_minus)


def decades_spanned(values) -> float:
    """Order-of-magnitude coverage: max log10 minus min log10."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.size == 0:
        raise DomainError("decade span needs at least one value")
    return float(arr.max() - arr.min())


def conformance_report(values, spec: DigitLawSpec, alpha: float = 0.01) -> ConformanceReport:
    """Assemble every statistic and a verdict for one sample.

    The verdict is conforming iff the chi-square statistic stays below the
    upper-tail critical value at significance alpha with df = #digits - 1;
    samples smaller than MIN_COUNT_PER_BIN * #digits get insufficient_data
    instead of a guess.  MAD, KS and decade span ride along as diagnostics.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly in (0, 1), got {alpha!r}")
    arr = as_log_array(values)
    if arr.size == 0:
        raise DomainError("conformance report needs at least one value")
    pmf = benford_pmf(spec)
    hist = digit_histogram(arr, spec)
    chi = chi_square_stat(hist, pmf)
    critical = chi_square_critical(spec.num_digits - 1, alpha)
    if hist.total < MIN_COUNT_PER_BIN * spec.num_digits:
        verdict = "insufficient_data"
    elif chi <= critical:
        verdict = "conforming"
    else:
        verdict = "non_conforming"
    return ConformanceReport(
        sample_size=hist.total,
        spec=spec,
        observed=hist.frequencies(),
        expected=pmf.probs,
        chi_square=chi,
        chi_square_critical=critical,
        mad=mad_stat(hist, pmf),
        ks_mantissa=ks_uniform_mantissa(arr),
        decades_spanned=decades_spanned(arr),
        verdict=verdict,
    )
