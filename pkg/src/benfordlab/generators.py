"""Deterministic seeded generators for the three conforming-sequence families.

All generators return base-10 logarithms (float64 arrays), never the raw
numbers: a 10,000-term fresh-factor geometric sequence over [1.0, 9.9]
climbs through thousands of decades, far past float range, while its log
stays a perfectly ordinary number and digit extraction needs nothing but
the mantissa anyway.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, SpecificationError
from .rng import MASK64, uniform_stream


def _check_seed(seed) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise SpecificationError(f"seed must be a non-negative integer, got {seed!r}")
    return seed & MASK64


@dataclass(frozen=True)
class SourceDistribution:
    """Distribution of the positive factors entering products.

    Either a uniform interval [lo, hi) with lo > 0 (lo == hi is a point
    mass) or an explicit list of positive values sampled uniformly.
    """

    lo: float | None = None
    hi: float | None = None
    values: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.values is not None:
            if self.lo is not None or self.hi is not None:
                raise SpecificationError("give either an interval or a value list, not both")
            vals = tuple(float(v) for v in self.values)
            if len(vals) == 0:
                raise SpecificationError("explicit value list must be non-empty")
            if not all(math.isfinite(v) and v > 0 for v in vals):
                raise SpecificationError("explicit values must be finite and > 0")
            object.__setattr__(self, "values", vals)
            return
        if self.lo is None or self.hi is None:
            raise SpecificationError("uniform source needs both interval endpoints")
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo <= 0 or hi < lo:
            raise SpecificationError(
                f"uniform source requires 0 < lo <= hi and finite endpoints, got [{lo}, {hi})"
            )
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def uniform(cls, lo: float, hi: float) -> "SourceDistribution":
        return cls(lo=lo, hi=hi)

    @classmethod
    def from_values(cls, values) -> "SourceDistribution":
        return cls(values=tuple(values))

    @property
    def kind(self) -> str:
        return "explicit_list" if self.values is not None else "uniform_interval"


@dataclass(frozen=True)
class DerivedLogMoments:
    """Mean and standard deviation of log10 of one source draw."""

    c0: float
    sigma0: float

    def __post_init__(self):
        if self.sigma0 < 0:
            raise SpecificationError("sigma0 must be >= 0")


@dataclass(frozen=True)
class ExponentIntervalSpec:
    """Power sequence a**R with R uniform over [p*log_a(K), (p+m)*log_a(K))."""

    a: float
    p: int = 0
    m_intervals: int = 1
    number_base: int = 10

    def __post_init__(self):
        a = float(self.a)
        if not math.isfinite(a) or a <= 0 or a == 1.0:
            raise SpecificationError(f"power base must be finite, > 0 and != 1, got {a!r}")
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise SpecificationError(f"decade offset must be an integer, got {self.p!r}")
        if not isinstance(self.m_intervals, int) or self.m_intervals < 1:
            raise SpecificationError(
                f"interval multiplier must be an integer >= 1, got {self.m_intervals!r}"
            )
        if not isinstance(self.number_base, int) or self.number_base < 2:
            raise SpecificationError(
                f"number base must be an integer >= 2, got {self.number_base!r}"
            )
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class ProductSpec:
    """N samples, each the product of M independent source draws."""

    source: SourceDistribution
    num_factors: int
    num_samples: int
    seed: int

    def __post_init__(self):
        if not isinstance(self.num_factors, int) or self.num_factors < 1:
            raise SpecificationError(f"num_factors must be an integer >= 1, got {self.num_factors!r}")
        if not isinstance(self.num_samples, int) or self.num_samples < 1:
            raise SpecificationError(f"num_samples must be an integer >= 1, got {self.num_samples!r}")
        object.__setattr__(self, "seed", _check_seed(self.seed))


@dataclass(frozen=True)
class GeometricSeqSpec:
    """Generalized geometric sequence: term J multiplies J uniform draws.

    fresh_factors gives term J its own J draws (the sequence as defined);
    cumulative keeps one running product, appending a single fresh factor
    per term.  lo == hi degenerates to a true geometric progression.
    """

    interval_lo: float
    interval_hi: float
    length: int
    seed: int
    mode: str = "fresh_factors"

    def __post_init__(self):
        lo, hi = float(self.interval_lo), float(self.interval_hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo <= 0 or hi < lo:
            raise SpecificationError(
                f"interval requires 0 < lo <= hi and finite endpoints, got [{lo}, {hi}]"
            )
        if not isinstance(self.length, int) or self.length < 1:
            raise SpecificationError(f"length must be an integer >= 1, got {self.length!r}")
        if self.mode not in ("fresh_factors", "cumulative"):
            raise SpecificationError(
                f"mode must be 'fresh_factors' or 'cumulative', got {self.mode!r}"
            )
        object.__setattr__(self, "interval_lo", lo)
        object.__setattr__(self, "interval_hi", hi)
        object.__setattr__(self, "seed", _check_seed(self.seed))


def gen_power_sequence(spec: ExponentIntervalSpec, n: int, seed: int) -> np.ndarray:
    """n log10 values of a**R_i, R_i uniform over the spec's interval.

    Output values lie in [p*log10(K), (p+m)*log10(K)); the upper endpoint
    is excluded (outputs are clipped by one ulp where multiplication
    rounding would touch it).
    """
    if not isinstance(n, int) or n < 1:
        raise SpecificationError(f"sample count must be an integer >= 1, got {n!r}")
    seed = _check_seed(seed)
    u = uniform_stream(seed, 0, n)
    log_a_k = math.log(spec.number_base) / math.log(spec.a)
    r = (spec.p + spec.m_intervals * u) * log_a_k
    out = r * math.log10(spec.a)
    log10_k = math.log10(spec.number_base)
    lo = spec.p * log10_k
    hi = (spec.p + spec.m_intervals) * log10_k
    np.clip(out, lo, np.nextafter(hi, -math.inf), out=out)
    return out


def derive_log_moments(source: SourceDistribution) -> DerivedLogMoments:
    """Mean and standard deviation of log10 of a single source draw.

    Uniform intervals use the closed-form integrals of log10 and log10^2;
    explicit lists use population moments of their log10 values.
    """
    if source.values is not None:
        logs = np.log10(np.asarray(source.values, dtype=np.float64))
        return DerivedLogMoments(c0=float(logs.mean()), sigma0=float(logs.std()))
    lo, hi = source.lo, source.hi
    if hi == lo:
        return DerivedLogMoments(c0=math.log10(lo), sigma0=0.0)
    ln10 = math.log(10.0)

    def i_log(x):  # integral of log10
        return x * (math.log(x) - 1.0) / ln10

    def i_log2(x):  # integral of log10^2
        lx = math.log(x)
        return x * (lx * lx - 2.0 * lx + 2.0) / (ln10 * ln10)

    width = hi - lo
    c0 = (i_log(hi) - i_log(lo)) / width
    second = (i_log2(hi) - i_log2(lo)) / width
    var = max(second - c0 * c0, 0.0)
    return DerivedLogMoments(c0=c0, sigma0=math.sqrt(var))


def gen_product_samples(spec: ProductSpec) -> np.ndarray:
    """num_samples log10 values, each the sum of num_factors log10 draws.

    Sample i consumes stream indices [i*M, (i+1)*M), so output is
    reproducible for a fixed spec no matter how generation is chunked.
    """
    src = spec.source
    if src.values is not None:
        table = np.log10(np.asarray(src.values, dtype=np.float64))
        return kernels.product_sums_table(
            spec.seed, spec.num_samples, spec.num_factors, table
        )
    return kernels.product_sums_uniform(
        spec.seed, spec.num_samples, spec.num_factors, src.lo, src.hi - src.lo
    )


def gen_geometric_sequence(spec: GeometricSeqSpec) -> np.ndarray:
    """log10 of the generalized geometric sequence terms, in order."""
    lo, width = spec.interval_lo, spec.interval_hi - spec.interval_lo
    if spec.mode == "cumulative":
        return kernels.geometric_cumulative(spec.seed, spec.length, lo, width)
    return kernels.geometric_fresh(spec.seed, spec.length, lo, width)


def scale_sequence(log10_values: np.ndarray, c: float) -> np.ndarray:
    """Multiply the underlying numbers by c: add log10(c) to every element."""
    c = float(c)
    if not math.isfinite(c) or c <= 0:
        raise DomainError(f"scale factor must be finite and > 0, got {c!r}")
    values = np.asarray(log10_values, dtype=np.float64)
    return values + math.log10(c)
