"""Exact digit laws for any base and position, and log decomposition.

The first-digit law in base K assigns digit d the probability
log_K(1 + 1/d); deeper positions sum that expression over every prefix the
digit can follow.  All digit information of a positive number lives in the
fractional part (mantissa) of its logarithm, which is why the analysis
code works on log10-domain samples throughout.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, SpecificationError

#: deepest supported digit position: extracting digit n multiplies the
#: mantissa's antilog by K**(n-1), and double precision keeps >= 11 guard
#: digits for K = 10 only up to n = 4
MAX_POSITION = 4


@dataclass(frozen=True)
class DigitLawSpec:
    """Which digit law: number base K and 1-based digit position."""

    base: int = 10
    position: int = 1

    def __post_init__(self):
        if not isinstance(self.base, int) or isinstance(self.base, bool):
            raise SpecificationError(f"base must be an integer, got {self.base!r}")
        if not isinstance(self.position, int) or isinstance(self.position, bool):
            raise SpecificationError(
                f"position must be an integer, got {self.position!r}"
            )
        if self.base < 2:
            raise SpecificationError(f"base must be >= 2, got {self.base}")
        if not 1 <= self.position <= MAX_POSITION:
            raise SpecificationError(
                f"position must be in [1, {MAX_POSITION}], got {self.position}"
            )

    @property
    def digits(self) -> np.ndarray:
        """Digit domain: {1..K-1} for the leading position, else {0..K-1}."""
        return np.arange(1 if self.position == 1 else 0, self.base)

    @property
    def num_digits(self) -> int:
        return self.base - 1 if self.position == 1 else self.base


@dataclass(frozen=True)
class DigitPmf:
    """Exact digit probabilities for one DigitLawSpec."""

    spec: DigitLawSpec
    probs: np.ndarray  # aligned with spec.digits

    def __post_init__(self):
        if self.probs.shape != (self.spec.num_digits,):
            raise SpecificationError("probability vector does not match digit domain")
        if not np.all(self.probs > 0):
            raise SpecificationError("digit probabilities must be strictly positive")
        if abs(float(self.probs.sum()) - 1.0) > 1e-12:
            raise SpecificationError("digit probabilities must sum to 1")
        if self.spec.position == 1 and not np.all(np.diff(self.probs) < 0):
            raise SpecificationError(
                "leading-digit probabilities must strictly decrease in d"
            )

    @property
    def digits(self) -> np.ndarray:
        return self.spec.digits

    def as_dict(self) -> dict[int, float]:
        return {int(d): float(p) for d, p in zip(self.digits, self.probs)}


@dataclass(frozen=True)
class MantissaDecomposition:
    """Integer characteristic and fractional mantissa of a logarithm."""

    characteristic: int
    mantissa: float

    def __post_init__(self):
        if not 0.0 <= self.mantissa < 1.0:
            raise DomainError(f"mantissa must lie in [0, 1), got {self.mantissa}")


def benford_pmf(spec: DigitLawSpec) -> DigitPmf:
    """Exact digit pmf for the given base and position.

    Position 1: P(d) = log_K(1 + 1/d) for d in 1..K-1.
    Position n >= 2: P(d) = sum over prefixes m in [K^(n-2), K^(n-1)) of
    log_K(1 + 1/(K*m + d)) for d in 0..K-1.  Terms are evaluated as
    log1p(1/arg)/ln(K) so deep positions keep full precision.
    """
    k = spec.base
    ln_k = math.log(k)
    if spec.position == 1:
        d = np.arange(1, k, dtype=np.float64)
        probs = np.log1p(1.0 / d) / ln_k
    else:
        d = np.arange(0, k, dtype=np.float64)
        prefixes = np.arange(k ** (spec.position - 2), k ** (spec.position - 1),
                             dtype=np.float64)
        args = k * prefixes[:, None] + d[None, :]
        probs = (np.log1p(1.0 / args) / ln_k).sum(axis=0)
    return DigitPmf(spec=spec, probs=probs)


def decompose_log(x: float, base: int = 10) -> MantissaDecomposition:
    """Split log_base(x) into integer characteristic and mantissa in [0, 1).

    When x sits within one ulp of an exact power of the base, log rounding
    can leave the mantissa at 1 - O(1e-16); such values are snapped to the
    power itself (mantissa 0, characteristic bumped) so reconstruction
    stays exact to representation precision.
    """
    if not isinstance(base, int) or isinstance(base, bool) or base < 2:
        raise SpecificationError(f"base must be an integer >= 2, got {base!r}")
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"decompose_log requires a finite positive value, got {x!r}")
    lk = math.log10(x) / math.log10(base)
    c = math.floor(lk)
    m = lk - c
    if m >= 1.0:
        c += 1
        m = 0.0
    elif m >= 1.0 - 1e-13:
        try:
            p = float(base) ** (c + 1)
        except OverflowError:
            p = math.inf
        if math.isfinite(p) and p > 0.0 and abs(x - p) <= np.spacing(p):
            c += 1
            m = 0.0
    return MantissaDecomposition(characteristic=int(c), mantissa=m)


def nth_digit_from_log(log10_value: float, spec: DigitLawSpec) -> int:
    """Digit at the spec's position of the number whose log10 is given.

    Only the mantissa of the log matters: with m the base-K mantissa, the
    digit is floor(K**(m + n - 1)) mod K, with powers landing within
    1e-13 (relative) of an integer snapped to it so that digit bins stay
    half-open under log-domain rounding.
    """
    v = float(log10_value)
    if not math.isfinite(v):
        raise DomainError(f"log10 value must be finite, got {v!r}")
    return int(kernels.digits_from_log10(np.array([v]), spec.base, spec.position)[0])


def digits_of_values(log10_values: np.ndarray, spec: DigitLawSpec) -> np.ndarray:
    """Vectorized nth_digit_from_log over an array of log10 values."""
    return kernels.digits_from_log10(log10_values, spec.base, spec.position)


def wrapped_gaussian_density(u, mu: float, sigma: float, truncation: int = 1):
    """Density at u of a normal with mean mu, width sigma, wrapped onto [0, 1).

    Evaluates (1/(sqrt(2 pi) sigma)) * sum_{P=-T}^{T} exp(-(u - mu + P)^2
    / (2 sigma^2)) with T = ceil(8 sigma) + truncation, which keeps the
    discarded tail below 1e-15 for any sigma.  Accepts a scalar or an
    array of u values.
    """
    if not (sigma > 0) or not math.isfinite(sigma):
        raise DomainError(f"sigma must be a finite positive real, got {sigma!r}")
    if truncation < 1:
        raise SpecificationError(f"truncation must be >= 1, got {truncation}")
    t = math.ceil(8.0 * sigma) + int(truncation)
    u_arr = np.asarray(u, dtype=np.float64)
    shifts = np.arange(-t, t + 1, dtype=np.float64)
    z = u_arr[..., None] - mu + shifts
    dens = np.exp(-(z * z) / (2.0 * sigma * sigma)).sum(axis=-1)
    dens /= math.sqrt(2.0 * math.pi) * sigma
    if np.isscalar(u) or u_arr.ndim == 0:
        return float(dens)
    return dens


def wrapped_gaussian_flatness(sigma: float, grid: int = 1024) -> float:
    """Max deviation from 1 of the wrapped density over a uniform u-grid."""
    u = np.arange(grid, dtype=np.float64) / grid
    dens = wrapped_gaussian_density(u, 0.0, sigma)
    return float(np.max(np.abs(dens - 1.0)))
