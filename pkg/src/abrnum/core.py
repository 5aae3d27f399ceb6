"""The Adaptive Base Representation (ABR) number system.

An ``n``-bit ABR string ``d_{n-1} ... d_0`` denotes

    v = sum_i (-1)**eps(i) * d_i * B_i

where ``B_i`` is the per-index base from :func:`compute_bases` and
``eps(i)`` flips the sign of an even-indexed set digit whose left neighbour
is also set. Every ``n``-bit ABR string decodes to a distinct value in
``[0, 2**n)``, so the codec is a bijection with plain binary.

Digit strings render most significant index first, as in ``"1011"`` where
``d_3 = 1`` and ``d_0 = 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import ABRRangeError, TheoremViolation

MAX_WIDTH = 62
ORACLE_MAX_WIDTH = 24

# Bit pair (d_{2k+1}, d_{2k}) for base-4 digit c; see _kernels for the values.
_PAIR0 = (0b00, 0b11, 0b01, 0b10)
_PAIRK = (0b00, 0b01, 0b11, 0b10)


class System(str, enum.Enum):
    ABR = "abr"
    BNS = "bns"

    def __str__(self) -> str:
        return self.value


def check_width(n: int, limit: int = MAX_WIDTH) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"width must be an integer, got {type(n).__name__}")
    n = int(n)
    if not 1 <= n <= limit:
        raise ABRRangeError(f"width {n} out of range: must be in [1, {limit}]")
    return n


def check_value(v: int, n: int) -> int:
    v = int(v)
    bound = (1 << n) - 1
    if not 0 <= v <= bound:
        raise ABRRangeError(
            f"value {v} out of range for width {n}: must be in [0, {bound}]"
        )
    return v


@dataclass(frozen=True)
class BitString:
    """A fixed-width digit string.

    ``pattern`` packs the digits so that digit ``i`` is bit ``i``. The
    width is explicit because ABR decoding depends on it.
    """

    pattern: int
    width: int

    def __post_init__(self):
        check_width(self.width)
        if not 0 <= self.pattern < (1 << self.width):
            raise ABRRangeError(
                f"pattern {self.pattern} does not fit in {self.width} bits"
            )

    @classmethod
    def from_str(cls, text: str) -> BitString:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ABRRangeError(f"not a bit string: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def from_digits(cls, digits) -> BitString:
        """Build from digits listed index 0 first (``d_0, d_1, ...``)."""
        digits = list(digits)
        pattern = 0
        for i, d in enumerate(digits):
            if d not in (0, 1):
                raise ABRRangeError(f"digit {d!r} at index {i} is not 0 or 1")
            pattern |= d << i
        return cls(pattern, len(digits))

    def digit(self, i: int) -> int:
        if not 0 <= i < self.width:
            raise ABRRangeError(
                f"index {i} out of range for width {self.width}: "
                f"must be in [0, {self.width - 1}]"
            )
        return (self.pattern >> i) & 1

    @property
    def digits(self) -> tuple[int, ...]:
        """Digits ordered by index, ``d_0`` first."""
        return tuple((self.pattern >> i) & 1 for i in range(self.width))

    def popcount(self) -> int:
        return bin(self.pattern).count("1")

    def __str__(self) -> str:
        return format(self.pattern, f"0{self.width}b")

    def __len__(self) -> int:
        return self.width


def _as_bitstring(s) -> BitString:
    return BitString.from_str(s) if isinstance(s, str) else s


@lru_cache(maxsize=None)
def compute_bases(n: int) -> tuple[int, ...]:
    """Return the ABR bases ``B_0 .. B_{n-1}`` for width ``n``.

    ``B_0 = 2`` and ``B_1 = 3`` when ``n > 1``; every other base is
    ``2**(i+1) - 1`` minus the sum of the odd-indexed bases below it.
    For ``n = 1`` the single base is ``2**1 - 1 = 1``.

    >>> compute_bases(4)
    (2, 3, 4, 12)
    """
    n = check_width(n)
    bases: list[int] = []
    for i in range(n):
        if i in (0, 1) and n > 1:
            bases.append(i + 2)
        else:
            odd_sum = sum(bases[j] for j in range(1, i, 2))
            bases.append((1 << (i + 1)) - 1 - odd_sum)
    return tuple(bases)


@lru_cache(maxsize=None)
def bases_array(n: int) -> np.ndarray:
    arr = np.array(compute_bases(n), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def epsilon(i: int, s: BitString | str) -> int:
    """Sign-flip indicator for digit ``i``: 1 iff ``i`` is even, not the
    top index, and both ``d_i`` and ``d_{i+1}`` are set."""
    s = _as_bitstring(s)
    d_i = s.digit(i)
    if i % 2 == 0 and i <= s.width - 2 and d_i and s.digit(i + 1):
        return 1
    return 0


def abr_decode(s: BitString | str) -> int:
    s = _as_bitstring(s)
    bases = compute_bases(s.width)
    v = 0
    for i in range(s.width):
        if s.digit(i):
            v += -bases[i] if epsilon(i, s) else bases[i]
    return v


def abr_encode(v: int, n: int) -> BitString:
    """Encode ``v`` as the unique ``n``-digit ABR string.

    Works pairwise on the base-4 digits of ``v``. Digit pair
    ``(d_{2k+1}, d_{2k})`` is worth ``4**k`` times 0, 1, 2 or 3 depending
    on its bit pattern, with pair 0 using a different permutation because
    ``B_0, B_1 = 2, 3``. For odd ``n`` the top digit has base ``2**(n-1)``
    and takes the remaining high bit of ``v``.

    Raises:
        ABRRangeError: if ``n`` is out of range or ``v >= 2**n``.
    """
    n = check_width(n)
    v = check_value(v, n)
    pattern = 0
    for k in range(n // 2):
        c = (v >> (2 * k)) & 3
        pattern |= (_PAIR0 if k == 0 else _PAIRK)[c] << (2 * k)
    if n % 2:
        pattern |= ((v >> (n - 1)) & 1) << (n - 1)
    return BitString(pattern, n)


def decode_all(n: int) -> np.ndarray:
    """ABR values of every ``n``-bit pattern, indexed by pattern."""
    n = check_width(n, ORACLE_MAX_WIDTH)
    return _kernels.decode_patterns(0, 1 << n, n, bases_array(n))


def exhaustive_inverse(n: int) -> np.ndarray:
    """Map each value ``v < 2**n`` to the pattern decoding to it.

    Built by decoding all ``2**n`` patterns, without any use of the
    pair-digit encoder.

    Raises:
        TheoremViolation: if any value has zero or several patterns.
    """
    values = decode_all(n)
    size = 1 << n
    bad = (values < 0) | (values >= size)
    if bad.any():
        p = int(np.flatnonzero(bad)[0])
        raise TheoremViolation(
            f"width {n}: pattern {p:0{n}b} decodes to {int(values[p])}, "
            f"outside [0, {size - 1}]"
        )
    counts = np.bincount(values, minlength=size)
    if (counts != 1).any():
        v = int(np.flatnonzero(counts != 1)[0])
        raise TheoremViolation(
            f"width {n}: value {v} has {int(counts[v])} ABR patterns, expected 1"
        )
    inverse = np.empty(size, dtype=np.int64)
    inverse[values] = np.arange(size, dtype=np.int64)
    return inverse


def abr_encode_exhaustive(v: int, n: int) -> BitString:
    """Brute-force encoder: decode every pattern, return the one giving ``v``.

    Independent oracle for :func:`abr_encode`. Limited to
    ``n <= 24`` so that a call stays within about a second.
    """
    if check_width(n) > ORACLE_MAX_WIDTH:
        raise ABRRangeError(
            f"width {n} exceeds the exhaustive oracle guard {ORACLE_MAX_WIDTH}"
        )
    v = check_value(v, n)
    matches = np.flatnonzero(decode_all(n) == v)
    if len(matches) != 1:
        raise TheoremViolation(
            f"width {n}: value {v} matched {len(matches)} patterns, expected 1"
        )
    return BitString(int(matches[0]), n)


def zero_extend(s: BitString | str, n: int) -> BitString:
    s = _as_bitstring(s)
    n = check_width(n)
    if n < s.width:
        raise ABRRangeError(
            f"cannot zero-extend width {s.width} to smaller width {n}"
        )
    return BitString(s.pattern, n)


def bns_encode(v: int, n: int) -> BitString:
    n = check_width(n)
    return BitString(check_value(v, n), n)


def bns_decode(s: BitString | str) -> int:
    s = _as_bitstring(s)
    return sum(d << i for i, d in enumerate(s.digits))


def encode(v: int, n: int, system: System | str = System.ABR) -> BitString:
    return abr_encode(v, n) if System(system) is System.ABR else bns_encode(v, n)


def decode(s: BitString | str, system: System | str = System.ABR) -> int:
    return abr_decode(s) if System(system) is System.ABR else bns_decode(s)
