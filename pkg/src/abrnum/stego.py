"""Byte-level mixing of binary and 4-bit ABR encodings.

Each byte is split into two nibbles. A mask says which of them are
rewritten as their 4-bit ABR encoding; the rest stay binary. The mask is
the secret: nothing in the output records it.
"""
from __future__ import annotations

import enum
from typing import BinaryIO

from .core import abr_decode, abr_encode, BitString

CHUNK_SIZE = 1 << 16


class StegoMask(str, enum.Enum):
    LOW_ABR = "low-abr"
    HIGH_ABR = "high-abr"
    BOTH_ABR = "both-abr"
    NONE = "none"

    def __str__(self) -> str:
        return self.value

    @property
    def low(self) -> bool:
        return self in (StegoMask.LOW_ABR, StegoMask.BOTH_ABR)

    @property
    def high(self) -> bool:
        return self in (StegoMask.HIGH_ABR, StegoMask.BOTH_ABR)


DEFAULT_MASK = StegoMask.LOW_ABR

_NIBBLE_TO_ABR = tuple(abr_encode(v, 4).pattern for v in range(16))
_ABR_TO_NIBBLE = tuple(abr_decode(BitString(p, 4)) for p in range(16))


def _build_table(mask: StegoMask, forward: bool) -> bytes:
    nib = _NIBBLE_TO_ABR if forward else _ABR_TO_NIBBLE
    out = bytearray(256)
    for b in range(256):
        hi, lo = b >> 4, b & 0xF
        if mask.high:
            hi = nib[hi]
        if mask.low:
            lo = nib[lo]
        out[b] = (hi << 4) | lo
    return bytes(out)


_EMBED = {m: _build_table(m, True) for m in StegoMask}
_EXTRACT = {m: _build_table(m, False) for m in StegoMask}


def embed_byte(b: int, mask: StegoMask | str = DEFAULT_MASK) -> int:
    """Rewrite the masked nibbles of ``b`` in ABR.

    >>> hex(embed_byte(0x0D, "low-abr"))
    '0xb'
    """
    return _EMBED[StegoMask(mask)][b]


def extract_byte(b: int, mask: StegoMask | str = DEFAULT_MASK) -> int:
    return _EXTRACT[StegoMask(mask)][b]


def embed_bytes(data: bytes, mask: StegoMask | str = DEFAULT_MASK) -> bytes:
    return bytes(data).translate(_EMBED[StegoMask(mask)])


def extract_bytes(data: bytes, mask: StegoMask | str = DEFAULT_MASK) -> bytes:
    return bytes(data).translate(_EXTRACT[StegoMask(mask)])


def _pump(src: BinaryIO, dst: BinaryIO, table: bytes) -> int:
    count = 0
    while True:
        try:
            chunk = src.read(CHUNK_SIZE)
        except OSError as exc:
            raise OSError(exc.errno, f"read failed at input offset {count}: {exc}") from exc
        if not chunk:
            return count
        try:
            dst.write(chunk.translate(table))
        except OSError as exc:
            raise OSError(exc.errno, f"write failed at output offset {count}: {exc}") from exc
        count += len(chunk)


def embed_stream(src: BinaryIO, dst: BinaryIO, mask: StegoMask | str = DEFAULT_MASK) -> int:
    """Transform ``src`` into ``dst`` byte by byte; returns the byte count."""
    return _pump(src, dst, _EMBED[StegoMask(mask)])


def extract_stream(src: BinaryIO, dst: BinaryIO, mask: StegoMask | str = DEFAULT_MASK) -> int:
    return _pump(src, dst, _EXTRACT[StegoMask(mask)])
