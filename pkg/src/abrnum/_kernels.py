"""Batch kernels for sweeping the ABR pattern/value space.

Each kernel has a numba ``@njit`` implementation and a vectorised numpy
implementation with identical results. The public names dispatch to numba
unless it is unavailable or ``ABRNUM_DISABLE_NUMBA`` is set to a truthy
value (``1``, ``true``, ``yes``) before import.

Kernels work on half-open ranges ``[lo, hi)`` so the sweep in
:mod:`abrnum.verify` can split the space into chunks.
"""
from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("ABRNUM_DISABLE_NUMBA", "").strip().lower()

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _FLAG not in ("1", "true", "yes", "on")
BACKEND = "numba" if USE_NUMBA else "numpy"

# Bit-pair tables for the pair-digit encoder, indexed by base-4 digit.
# Pair 0 contributes {0, 2, 3, 1} for patterns 00, 01, 10, 11.
# Pair k >= 1 contributes 4**k * {0, 1, 3, 2} for the same patterns.
PAIR0_BITS = np.array([0b00, 0b11, 0b01, 0b10], dtype=np.int64)
PAIRK_BITS = np.array([0b00, 0b01, 0b11, 0b10], dtype=np.int64)


# --------------------------------------------------------------- numpy path


def decode_patterns_numpy(lo: int, hi: int, n: int, bases: np.ndarray) -> np.ndarray:
    """ABR-decode every pattern in ``[lo, hi)`` at width ``n``."""
    p = np.arange(lo, hi, dtype=np.int64)
    v = np.zeros_like(p)
    for i in range(n):
        d = (p >> i) & 1
        if i % 2 == 0 and i <= n - 2:
            flip = d & ((p >> (i + 1)) & 1)
            v += bases[i] * (d - 2 * flip)
        else:
            v += bases[i] * d
    return v


def encode_values_numpy(lo: int, hi: int, n: int) -> np.ndarray:
    """Pair-digit ABR encoding of every value in ``[lo, hi)`` at width ``n``."""
    v = np.arange(lo, hi, dtype=np.int64)
    out = np.zeros_like(v)
    for k in range(n // 2):
        table = PAIR0_BITS if k == 0 else PAIRK_BITS
        out |= table[(v >> (2 * k)) & 3] << (2 * k)
    if n % 2:
        out |= ((v >> (n - 1)) & 1) << (n - 1)
    return out


def popcount_numpy(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros(a.shape, dtype=np.uint8)
    x = a.copy()
    while True:
        nz = x != 0
        if not nz.any():
            return out
        out += nz.astype(np.uint8)
        x &= x - 1


# --------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def decode_patterns_numba(lo, hi, n, bases):
        out = np.empty(hi - lo, dtype=np.int64)
        for idx in range(hi - lo):
            p = lo + idx
            v = 0
            for i in range(n):
                d = (p >> i) & 1
                if d:
                    if i % 2 == 0 and i <= n - 2 and (p >> (i + 1)) & 1:
                        v -= bases[i]
                    else:
                        v += bases[i]
            out[idx] = v
        return out

    @njit(cache=True)
    def _encode_values_numba(lo, hi, n, pair0, pairk):
        out = np.empty(hi - lo, dtype=np.int64)
        npairs = n // 2
        for idx in range(hi - lo):
            v = lo + idx
            pat = 0
            for k in range(npairs):
                c = (v >> (2 * k)) & 3
                if k == 0:
                    pat |= pair0[c]
                else:
                    pat |= pairk[c] << (2 * k)
            if n % 2:
                pat |= ((v >> (n - 1)) & 1) << (n - 1)
            out[idx] = pat
        return out

    def encode_values_numba(lo: int, hi: int, n: int) -> np.ndarray:
        return _encode_values_numba(lo, hi, n, PAIR0_BITS, PAIRK_BITS)

    @njit(cache=True)
    def _popcount_numba(a):
        out = np.empty(a.shape[0], dtype=np.uint8)
        for idx in range(a.shape[0]):
            x = a[idx]
            c = 0
            while x:
                x &= x - 1
                c += 1
            out[idx] = c
        return out

    def popcount_numba(a: np.ndarray) -> np.ndarray:
        a = np.ascontiguousarray(a, dtype=np.int64)
        return _popcount_numba(a.ravel()).reshape(a.shape)


# ---------------------------------------------------------------- dispatch

if USE_NUMBA:
    decode_patterns = decode_patterns_numba
    encode_values = encode_values_numba
    popcount = popcount_numba
else:
    decode_patterns = decode_patterns_numpy
    encode_values = encode_values_numpy
    popcount = popcount_numpy


def backends() -> dict[str, dict]:
    """Map backend name to its kernel functions, for benchmarks and tests."""
    out = {
        "numpy": {
            "decode_patterns": decode_patterns_numpy,
            "encode_values": encode_values_numpy,
            "popcount": popcount_numpy,
        }
    }
    if HAVE_NUMBA:
        out["numba"] = {
            "decode_patterns": decode_patterns_numba,
            "encode_values": encode_values_numba,
            "popcount": popcount_numba,
        }
    return out
