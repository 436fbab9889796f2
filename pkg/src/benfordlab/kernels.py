"""Hot numeric kernels in two flavours: numba @njit loops and pure numpy.

Every kernel consumes SplitMix64 stream indices deterministically (sample i
of a product uses indices [i*M, (i+1)*M), term J of a fresh-factor
geometric sequence uses the J indices starting at J*(J-1)/2), so both
backends draw identical uniforms and chunking cannot change results.
"""
import math

import numpy as np

from . import _backend
from .rng import GOLDEN, MASK64, _MIX1, _MIX2

_U_GOLDEN = np.uint64(GOLDEN)
_U_MIX1 = np.uint64(_MIX1)
_U_MIX2 = np.uint64(_MIX2)
_U30 = np.uint64(30)
_U27 = np.uint64(27)
_U31 = np.uint64(31)
_U11 = np.uint64(11)
_ONE64 = np.uint64(1)
_INV53 = 2.0**-53

# buffer cap for the chunked numpy paths (doubles)
_CHUNK = 1 << 22

# relative half-width of the snap window: a power K**(m+n-1) landing within
# this distance of an integer is treated as that integer, so digit bins stay
# half-open under the ~1e-16..1e-14 rounding carried by computed logarithms
_SNAP = 1e-13


# ---------------------------------------------------------------------------
# pure-numpy implementations


def uniforms_numpy(seed, start, count):
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed) + idx * _U_GOLDEN
    z = (z ^ (z >> _U30)) * _U_MIX1
    z = (z ^ (z >> _U27)) * _U_MIX2
    z = z ^ (z >> _U31)
    return (z >> _U11).astype(np.float64) * _INV53


def digits_numpy(values, base, position):
    lk = values / math.log10(base)
    m = lk - np.floor(lk)
    m[m >= 1.0] = 0.0
    t = np.power(float(base), m + (position - 1))
    r = np.rint(t)
    np.copyto(t, r, where=np.abs(t - r) <= _SNAP * t)
    d = np.floor(t).astype(np.int64) % base
    if position == 1:
        d[d == 0] = 1
    return d


def mantissas(values):
    """Fractional part of base-10 logs, guaranteed in [0, 1)."""
    m = values - np.floor(values)
    m[m >= 1.0] = 0.0
    return m


def product_sums_uniform_numpy(seed, n, m, lo, width):
    out = np.empty(n, dtype=np.float64)
    step = max(1, _CHUNK // max(m, 1))
    for s0 in range(0, n, step):
        s1 = min(n, s0 + step)
        u = uniforms_numpy(seed, s0 * m, (s1 - s0) * m)
        logs = np.log10(lo + width * u)
        out[s0:s1] = logs.reshape(s1 - s0, m).sum(axis=1)
    return out


def product_sums_table_numpy(seed, n, m, log_table):
    out = np.empty(n, dtype=np.float64)
    size = log_table.size
    step = max(1, _CHUNK // max(m, 1))
    for s0 in range(0, n, step):
        s1 = min(n, s0 + step)
        u = uniforms_numpy(seed, s0 * m, (s1 - s0) * m)
        idx = np.minimum((u * size).astype(np.int64), size - 1)
        out[s0:s1] = log_table[idx].reshape(s1 - s0, m).sum(axis=1)
    return out


def geometric_fresh_numpy(seed, n_terms, lo, width):
    if width == 0.0:
        # point mass: every factor is lo, so term J is J sequential adds of
        # log10(lo) — the same accumulation the cumulative mode performs
        return geometric_cumulative_numpy(seed, n_terms, lo, width)
    out = np.empty(n_terms, dtype=np.float64)
    done = 0
    start = 0
    while done < n_terms:
        jend = done
        block = 0
        while jend < n_terms:
            size = jend + 1
            if block > 0 and block + size > _CHUNK:
                break
            block += size
            jend += 1
        u = uniforms_numpy(seed, start, block)
        logs = np.log10(lo + width * u)
        sizes = np.arange(done + 1, jend + 1, dtype=np.int64)
        bounds = np.zeros(sizes.size, dtype=np.int64)
        np.cumsum(sizes[:-1], out=bounds[1:])
        out[done:jend] = np.add.reduceat(logs, bounds)
        start += block
        done = jend
    return out


def geometric_cumulative_numpy(seed, n_terms, lo, width):
    out = np.empty(n_terms, dtype=np.float64)
    acc = 0.0
    done = 0
    while done < n_terms:
        block = min(_CHUNK, n_terms - done)
        u = uniforms_numpy(seed, done, block)
        chunk = np.cumsum(np.log10(lo + width * u))
        out[done : done + block] = acc + chunk
        acc += chunk[-1]
        done += block
    return out


# ---------------------------------------------------------------------------
# numba implementations (compile lazily; cached on disk)

if _backend.HAVE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _u01(seed, k):
        z = seed + (k + _ONE64) * _U_GOLDEN
        z = (z ^ (z >> _U30)) * _U_MIX1
        z = (z ^ (z >> _U27)) * _U_MIX2
        z = z ^ (z >> _U31)
        return np.float64(z >> _U11) * _INV53

    @njit(cache=True)
    def uniforms_numba(seed, start, count):
        out = np.empty(count, dtype=np.float64)
        for i in range(count):
            out[i] = _u01(seed, start + np.uint64(i))
        return out

    @njit(cache=True)
    def digits_numba(values, base, position):
        n = values.shape[0]
        out = np.empty(n, dtype=np.int64)
        log10k = math.log10(base)
        fbase = float(base)
        expo = float(position - 1)
        for i in range(n):
            lk = values[i] / log10k
            m = lk - math.floor(lk)
            if m >= 1.0:
                m = 0.0
            t = fbase ** (m + expo)
            r = math.floor(t + 0.5)
            if abs(t - r) <= _SNAP * t:
                t = r
            d = int(math.floor(t)) % base
            if position == 1 and d == 0:
                d = 1
            out[i] = d
        return out

    @njit(cache=True)
    def product_sums_uniform_numba(seed, n, m, lo, width):
        out = np.empty(n, dtype=np.float64)
        k = np.uint64(0)
        for i in range(n):
            acc = 0.0
            for _ in range(m):
                acc += math.log10(lo + width * _u01(seed, k))
                k += _ONE64
            out[i] = acc
        return out

    @njit(cache=True)
    def product_sums_table_numba(seed, n, m, log_table):
        out = np.empty(n, dtype=np.float64)
        size = log_table.size
        k = np.uint64(0)
        for i in range(n):
            acc = 0.0
            for _ in range(m):
                idx = int(_u01(seed, k) * size)
                if idx >= size:
                    idx = size - 1
                acc += log_table[idx]
                k += _ONE64
            out[i] = acc
        return out

    @njit(cache=True)
    def geometric_fresh_numba(seed, n_terms, lo, width):
        out = np.empty(n_terms, dtype=np.float64)
        k = np.uint64(0)
        for j in range(n_terms):
            acc = 0.0
            for _ in range(j + 1):
                acc += math.log10(lo + width * _u01(seed, k))
                k += _ONE64
            out[j] = acc
        return out

    @njit(cache=True)
    def geometric_cumulative_numba(seed, n_terms, lo, width):
        out = np.empty(n_terms, dtype=np.float64)
        acc = 0.0
        for j in range(n_terms):
            acc += math.log10(lo + width * _u01(seed, np.uint64(j)))
            out[j] = acc
        return out


# ---------------------------------------------------------------------------
# backend dispatch


def _f64(values):
    return np.ascontiguousarray(values, dtype=np.float64)


def digits_from_log10(values, base, position):
    """Digit at `position` (1-based, base K) of every log10-domain value."""
    if _backend.using_numba():
        return digits_numba(_f64(values), base, position)
    return digits_numpy(_f64(values), base, position)


def product_sums_uniform(seed, n, m, lo, width):
    if _backend.using_numba():
        return product_sums_uniform_numba(np.uint64(seed), n, m, lo, width)
    return product_sums_uniform_numpy(seed, n, m, lo, width)


def product_sums_table(seed, n, m, log_table):
    table = _f64(log_table)
    if _backend.using_numba():
        return product_sums_table_numba(np.uint64(seed), n, m, table)
    return product_sums_table_numpy(seed, n, m, table)


def geometric_fresh(seed, n_terms, lo, width):
    if _backend.using_numba():
        return geometric_fresh_numba(np.uint64(seed), n_terms, lo, width)
    return geometric_fresh_numpy(seed, n_terms, lo, width)


def geometric_cumulative(seed, n_terms, lo, width):
    if _backend.using_numba():
        return geometric_cumulative_numba(np.uint64(seed), n_terms, lo, width)
    return geometric_cumulative_numpy(seed, n_terms, lo, width)
