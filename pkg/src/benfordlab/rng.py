"""Counter-mode SplitMix64: the package's only source of randomness.

The i-th draw from a seed is a pure function of (seed, i):

    state_i = seed + (i + 1) * 0x9E3779B97F4A7C15      (mod 2^64)
    out_i   = mix(state_i)                              (Vigna's finalizer)
    u_i     = (out_i >> 11) * 2^-53                     in [0, 1)

This is exactly the SplitMix64 stream of the seed, addressable by index,
so sample generation can be partitioned across workers by splitting the
index range, and runs are bit-reproducible regardless of chunking or
backend.  Uniform reals carry the top 53 bits of the output word.
"""
import numpy as np

from . import _backend
from .errors import DomainError

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_DERIVE_SALT = 0xC2B2AE3D27D4EB4F  # arbitrary odd constant for substreams


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer (reference scalar form)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return (z ^ (z >> 31)) & MASK64


def output_at(seed: int, index: int) -> int:
    """The index-th 64-bit output word of the stream (0-based)."""
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)


def uniform_at(seed: int, index: int) -> float:
    """The index-th uniform double in [0, 1)."""
    return (output_at(seed, index) >> 11) * 2.0**-53


def derive_seed(seed: int, stream: int) -> int:
    """Decorrelated child seed for an independent substream.

    Double application of the finalizer keeps child streams disjoint from
    the parent counter sequence for all practical purposes.
    """
    return mix64(mix64((seed ^ _DERIVE_SALT) & MASK64) + (stream & MASK64) * GOLDEN)


def uniform_stream(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform doubles at stream indices [start, start + count)."""
    if count < 0 or start < 0:
        raise DomainError("stream start and count must be non-negative")
    from . import kernels

    if count == 0:
        return np.empty(0, dtype=np.float64)
    if _backend.using_numba():
        return kernels.uniforms_numba(
            np.uint64(seed & MASK64), np.uint64(start), np.int64(count)
        )
    return kernels.uniforms_numpy(seed & MASK64, start, count)
