"""Number-theoretic transform over the prime 15 * 2**27 + 1.

Residues stay below 2**31, so products fit in int64.  The butterfly loop is
compiled with numba; twiddles for each stage are stored contiguously.
"""
from __future__ import annotations

from functools import lru_cache

import numba
import numpy as np

PRIME = 2013265921  # 15 * 2**27 + 1
GENERATOR = 31
MAX_LOG_SIZE = 27


@numba.njit(cache=True)
def _bit_reverse(a):
    n = a.size
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            a[i], a[j] = a[j], a[i]


@numba.njit(cache=True)
def _butterflies(a, twiddles, p):
    n = a.size
    m = 1
    while m < n:
        for s in range(0, n, 2 * m):
            for k in range(m):
                u = a[s + k]
                v = a[s + k + m] * twiddles[m + k] % p
                x = u + v
                if x >= p:
                    x -= p
                y = u - v
                if y < 0:
                    y += p
                a[s + k] = x
                a[s + k + m] = y
        m *= 2


@lru_cache(maxsize=16)
def _twiddles(size: int, invert: bool) -> np.ndarray:
    # stage with half-length m keeps w_{2m}^k, k < m, at offset m
    tw = np.ones(max(size, 2), dtype=np.int64)
    m = 1
    while m < size:
        w = pow(GENERATOR, (PRIME - 1) // (2 * m), PRIME)
        if invert:
            w = pow(w, PRIME - 2, PRIME)
        stage = tw[m : 2 * m]
        k = 1
        while k < m:
            stage[k : 2 * k] = stage[:k] * pow(w, k, PRIME) % PRIME
            k *= 2
        m *= 2
    tw.flags.writeable = False
    return tw


def ntt(values, invert: bool = False) -> np.ndarray:
    """Forward (or inverse, scaled) transform of a power-of-two length array."""
    a = np.array(values, dtype=np.int64) % PRIME
    n = a.size
    if n == 0 or n & (n - 1):
        raise ValueError("length must be a power of two")
    if n > 1 << MAX_LOG_SIZE:
        raise ValueError(f"length {n} exceeds 2**{MAX_LOG_SIZE}")
    if n == 1:
        return a
    _bit_reverse(a)
    _butterflies(a, _twiddles(n, invert), PRIME)
    if invert:
        a = a * pow(n, PRIME - 2, PRIME) % PRIME
    return a


def cyclic_convolve_counts(x, y, size: int) -> np.ndarray:
    """Linear convolution of non-negative integer arrays, computed modulo ``PRIME``.

    ``size`` is the transform length (a power of two at least
    ``len(x) + len(y) - 1``).  Exact as long as every true count is below
    ``PRIME``.
    """
    fx = np.zeros(size, dtype=np.int64)
    fy = np.zeros(size, dtype=np.int64)
    fx[: len(x)] = x
    fy[: len(y)] = y
    fx = ntt(fx)
    fy = ntt(fy)
    prod = fx * fy % PRIME
    return ntt(prod, invert=True)[: len(x) + len(y) - 1]
