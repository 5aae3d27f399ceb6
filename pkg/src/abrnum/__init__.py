"""Adaptive Base Representation (ABR) codec, theorem verifier and demos."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    BitString,
    System,
    abr_decode,
    abr_encode,
    abr_encode_exhaustive,
    bns_decode,
    bns_encode,
    compute_bases,
    epsilon,
    zero_extend,
)
from .errors import ABRError, ABRRangeError, HuffmanDecodeError, TheoremViolation  # noqa: E402

__all__ = [
    "ABRError",
    "ABRRangeError",
    "BitString",
    "HuffmanDecodeError",
    "System",
    "TheoremViolation",
    "abr_decode",
    "abr_encode",
    "abr_encode_exhaustive",
    "bns_decode",
    "bns_encode",
    "compute_bases",
    "epsilon",
    "zero_extend",
]
