"""Exhaustive checks of the ABR/binary set equivalence.

For a width ``n`` every one of the ``2**n`` patterns is decoded and the
resulting values are tallied; the width passes when the tally hits each of
``0 .. 2**n - 1`` exactly once. The pattern space is split into contiguous
chunks that can run in worker processes. Tallies are merged by addition,
so the report does not depend on the number of workers.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import (
    ORACLE_MAX_WIDTH,
    abr_decode,
    abr_encode,
    bases_array,
    check_width,
    exhaustive_inverse,
)
from .errors import ABRRangeError

MAX_EXEMPLARS = 16
ENCODER_CHECK_MAX_WIDTH = 16
_MIN_CHUNK = 1 << 16


@dataclass
class VerificationReport:
    width: int
    distinct_values: int
    min_value: int
    max_value: int
    duplicates: list[tuple[int, int, int]] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)
    duplicate_count: int = 0
    missing_count: int = 0
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        size = 1 << self.width
        return (
            self.duplicate_count == 0
            and self.missing_count == 0
            and self.distinct_values == size
            and self.min_value == 0
            and self.max_value == size - 1
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"n={self.width:>2} {status} distinct={self.distinct_values}"
            f"/{1 << self.width} range=[{self.min_value}, {self.max_value}]"
            f" duplicates={self.duplicate_count} missing={self.missing_count}"
            f" ({self.elapsed_ms:.1f} ms)"
        )
        for value, p, q in self.duplicates:
            line += f"\n    collision: value {value} <- {p:0{self.width}b}, {q:0{self.width}b}"
        if self.missing:
            shown = ", ".join(map(str, self.missing))
            line += f"\n    missing: {shown}"
        return line

    def to_kv(self) -> str:
        pairs = {
            "width": self.width,
            "pass": int(self.passed),
            "distinct": self.distinct_values,
            "min": self.min_value,
            "max": self.max_value,
            "duplicates": self.duplicate_count,
            "missing": self.missing_count,
            "elapsed_ms": f"{self.elapsed_ms:.3f}",
        }
        return " ".join(f"{k}={v}" for k, v in pairs.items())


def _decode_chunk(args) -> np.ndarray:
    lo, hi, n, bases = args
    return _kernels.decode_patterns(lo, hi, n, bases)


def _chunks(n: int, jobs: int) -> list[tuple[int, int]]:
    size = 1 << n
    step = max(_MIN_CHUNK, -(-size // max(jobs, 1)))
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def verify_width(
    n: int,
    jobs: int = 1,
    bases=None,
    executor: ProcessPoolExecutor | None = None,
) -> VerificationReport:
    """Decode all ``2**n`` patterns and report collisions and gaps.

    ``bases`` overrides the base sequence; it exists so tests can feed a
    deliberately broken sequence and watch the report fail.
    """
    n = check_width(n)
    if n > ORACLE_MAX_WIDTH:
        raise ABRRangeError(
            f"width {n} exceeds the sweep guard {ORACLE_MAX_WIDTH}"
        )
    bases = bases_array(n) if bases is None else np.asarray(bases, dtype=np.int64)
    if bases.shape != (n,):
        raise ABRRangeError(f"expected {n} bases, got {bases.shape[0]}")

    start = time.perf_counter()
    size = 1 << n
    tasks = [(lo, hi, n, bases) for lo, hi in _chunks(n, jobs)]
    if executor is not None and len(tasks) > 1:
        parts = executor.map(_decode_chunk, tasks)
    elif jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_decode_chunk, tasks))
    else:
        parts = map(_decode_chunk, tasks)

    counts = np.zeros(size, dtype=np.int64)
    lo_val, hi_val = None, None
    for part in parts:
        pmin, pmax = int(part.min()), int(part.max())
        lo_val = pmin if lo_val is None else min(lo_val, pmin)
        hi_val = pmax if hi_val is None else max(hi_val, pmax)
        inside = part[(part >= 0) & (part < size)]
        counts += np.bincount(inside, minlength=size)

    dup_values = np.flatnonzero(counts > 1)
    missing = np.flatnonzero(counts == 0)
    report = VerificationReport(
        width=n,
        distinct_values=int(np.count_nonzero(counts)),
        min_value=lo_val,
        max_value=hi_val,
        missing=[int(v) for v in missing[:MAX_EXEMPLARS]],
        duplicate_count=int((counts[dup_values] - 1).sum()),
        missing_count=int(len(missing)),
    )
    if len(dup_values):
        report.duplicates = _collision_exemplars(n, bases, dup_values[:MAX_EXEMPLARS])
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


def _collision_exemplars(n, bases, dup_values) -> list[tuple[int, int, int]]:
    # failure path only: re-decode to recover the colliding patterns
    values = _kernels.decode_patterns(0, 1 << n, n, bases)
    out = []
    for v in dup_values:
        p, q = np.flatnonzero(values == v)[:2]
        out.append((int(v), int(p), int(q)))
    return out


def verify_range(n_lo: int, n_hi: int, jobs: int = 1) -> list[VerificationReport]:
    n_lo, n_hi = check_width(n_lo), check_width(n_hi)
    if n_lo > n_hi or n_hi > ORACLE_MAX_WIDTH:
        raise ABRRangeError(
            f"invalid width range [{n_lo}, {n_hi}]: need 1 <= min <= max <= "
            f"{ORACLE_MAX_WIDTH}"
        )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return [verify_width(n, jobs, executor=pool) for n in range(n_lo, n_hi + 1)]
    return [verify_width(n) for n in range(n_lo, n_hi + 1)]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def default_jobs() -> int:
    return os.cpu_count() or 1


def cross_check_encoders(n: int) -> bool:
    """True iff the pair-digit encoder agrees with brute force for all v < 2**n."""
    n = check_width(n)
    if n > ENCODER_CHECK_MAX_WIDTH:
        raise ABRRangeError(
            f"width {n} exceeds the encoder cross-check guard {ENCODER_CHECK_MAX_WIDTH}"
        )
    inverse = exhaustive_inverse(n)
    return all(abr_encode(v, n).pattern == int(inverse[v]) for v in range(1 << n))


@dataclass
class PopcountProfile:
    """Per-value bit usage in ABR and binary.

    Arrays are indexed by value; ``rows()`` yields the
    ``(value, abr_popcount, bns_popcount)`` triples.
    """

    width: int
    abr_popcount: np.ndarray
    bns_popcount: np.ndarray

    def __len__(self) -> int:
        return len(self.abr_popcount)

    def rows(self):
        for v, (a, b) in enumerate(zip(self.abr_popcount.tolist(), self.bns_popcount.tolist())):
            yield v, a, b

    def full_usage_values(self) -> np.ndarray:
        return np.flatnonzero(self.abr_popcount == self.width)


def popcount_profile(n: int) -> PopcountProfile:
    n = check_width(n)
    if n > ORACLE_MAX_WIDTH:
        raise ABRRangeError(f"width {n} exceeds the profile guard {ORACLE_MAX_WIDTH}")
    size = 1 << n
    abr = _kernels.popcount(_kernels.encode_values(0, size, n))
    bns = _kernels.popcount(np.arange(size, dtype=np.int64))
    return PopcountProfile(n, abr, bns)


def all_ones_value(n: int) -> int:
    """Value of the all-ones ABR string, the only one using every bit."""
    n = check_width(n)
    return abr_decode(f"{'1' * n}")
