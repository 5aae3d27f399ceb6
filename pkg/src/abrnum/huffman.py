"""A small canonical Huffman codec over bytes.

Used to show that a compressor which only sees symbol frequencies treats
ABR-coded data exactly like binary data: the per-byte ABR rewrite is a
bijection, so it permutes the frequency table and leaves every code length
multiset, and hence the payload size, unchanged.

Container layout::

    b"ABRH" | version (1 byte) | 256 code lengths (1 byte each)
            | pad bit count (1 byte) | payload, MSB first
"""
from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from .errors import HuffmanDecodeError
from .stego import DEFAULT_MASK, StegoMask, embed_bytes

MAGIC = b"ABRH"
VERSION = 1
HEADER_SIZE = len(MAGIC) + 1 + 256 + 1
_TABLE_BITS_LIMIT = 20


def frequency_table(data: bytes) -> dict[int, int]:
    return dict(Counter(data))


def code_lengths(freq: dict[int, int]) -> dict[int, int]:
    """Huffman code length per symbol.

    Merges the two lightest nodes until one remains. Ties go to the node
    holding the lowest symbol value, then to the node created first.
    """
    live = {s: c for s, c in freq.items() if c > 0}
    if not live:
        raise ValueError("cannot build a Huffman code from an empty frequency table")
    if len(live) == 1:
        return {next(iter(live)): 1}

    # heap entries: (weight, lowest symbol, creation order, symbols below)
    heap = [(c, s, order, [s]) for order, (s, c) in enumerate(sorted(live.items()))]
    heapq.heapify(heap)
    depth = dict.fromkeys(live, 0)
    order = len(heap)
    while len(heap) > 1:
        w1, m1, _, syms1 = heapq.heappop(heap)
        w2, m2, _, syms2 = heapq.heappop(heap)
        for s in syms1:
            depth[s] += 1
        for s in syms2:
            depth[s] += 1
        heapq.heappush(heap, (w1 + w2, min(m1, m2), order, syms1 + syms2))
        order += 1
    return depth


def canonical_codes(lengths: dict[int, int]) -> dict[int, str]:
    """Assign canonical codes: shorter first, then by symbol value."""
    codes = {}
    code = 0
    prev_len = 0
    for length, sym in sorted((l, s) for s, l in lengths.items() if l > 0):
        code <<= length - prev_len
        codes[sym] = format(code, f"0{length}b")
        code += 1
        prev_len = length
    return codes


def huffman_build(freq: dict[int, int]) -> dict[int, str]:
    """Prefix code for a frequency table.

    >>> huffman_build({97: 1})
    {97: '0'}
    """
    return canonical_codes(code_lengths(freq))


@dataclass(frozen=True)
class Compressed:
    code: dict[int, str]
    payload: bytes
    bit_length: int


def huffman_compress(data: bytes) -> Compressed:
    data = bytes(data)
    if not data:
        return Compressed({}, b"", 0)
    code = huffman_build(frequency_table(data))
    table = [code.get(b, "") for b in range(256)]
    bits = "".join(map(table.__getitem__, data))
    nbits = len(bits)
    pad = -nbits % 8
    payload = int(bits + "0" * pad, 2).to_bytes((nbits + pad) // 8, "big")
    return Compressed(code, payload, nbits)


def _lookup_table(code: dict[int, str], width: int):
    table: list[tuple[int, int] | None] = [None] * (1 << width)
    for sym, word in code.items():
        shift = width - len(word)
        base = int(word, 2) << shift
        entry = (sym, len(word))
        for j in range(base, base + (1 << shift)):
            table[j] = entry
    return table


def huffman_decompress(code: dict[int, str], payload: bytes, bit_length: int) -> bytes:
    if bit_length == 0:
        return b""
    if not code:
        raise HuffmanDecodeError("non-empty payload with an empty code table", 0)
    if bit_length > 8 * len(payload):
        raise HuffmanDecodeError(
            f"payload holds {8 * len(payload)} bits, header claims {bit_length}",
            8 * len(payload),
        )
    bits = format(int.from_bytes(payload, "big"), f"0{8 * len(payload)}b")[:bit_length]
    maxlen = max(len(w) for w in code.values())
    out = bytearray()
    pos = 0
    if maxlen <= _TABLE_BITS_LIMIT:
        table = _lookup_table(code, maxlen)
        padded = bits + "0" * maxlen
        while pos < bit_length:
            entry = table[int(padded[pos : pos + maxlen], 2)]
            if entry is None:
                raise HuffmanDecodeError("bit sequence matches no code", pos)
            sym, length = entry
            if pos + length > bit_length:
                raise HuffmanDecodeError("truncated final code", pos)
            out.append(sym)
            pos += length
        return bytes(out)

    by_word = {w: s for s, w in code.items()}
    start = 0
    while start < bit_length:
        for end in range(start + 1, min(start + maxlen, bit_length) + 1):
            sym = by_word.get(bits[start:end])
            if sym is not None:
                out.append(sym)
                start = end
                break
        else:
            raise HuffmanDecodeError("bit sequence matches no code", start)
    return bytes(out)


def pack(c: Compressed) -> bytes:
    lengths = bytearray(256)
    for sym, word in c.code.items():
        if len(word) > 255:
            raise ValueError(f"code length {len(word)} for symbol {sym} exceeds 255")
        lengths[sym] = len(word)
    pad = -c.bit_length % 8
    return MAGIC + bytes([VERSION]) + bytes(lengths) + bytes([pad]) + c.payload


def unpack(blob: bytes) -> Compressed:
    if len(blob) < HEADER_SIZE:
        raise HuffmanDecodeError(f"container shorter than the {HEADER_SIZE}-byte header")
    if blob[:4] != MAGIC:
        raise HuffmanDecodeError(f"bad magic {bytes(blob[:4])!r}, expected {MAGIC!r}")
    if blob[4] != VERSION:
        raise HuffmanDecodeError(f"unsupported container version {blob[4]}")
    lengths = {s: l for s, l in enumerate(blob[5:261]) if l}
    pad = blob[261]
    payload = bytes(blob[HEADER_SIZE:])
    if pad > 7 or (pad and not payload):
        raise HuffmanDecodeError(f"invalid pad length {pad}")
    code = canonical_codes(lengths) if lengths else {}
    return Compressed(code, payload, 8 * len(payload) - pad)


def compress_bytes(data: bytes) -> bytes:
    return pack(huffman_compress(data))


def decompress_bytes(blob: bytes) -> bytes:
    c = unpack(blob)
    return huffman_decompress(c.code, c.payload, c.bit_length)


@dataclass(frozen=True)
class CompareReport:
    input_bytes: int
    mask: StegoMask
    raw_bits: int
    abr_bits: int

    @property
    def equal(self) -> bool:
        return self.raw_bits == self.abr_bits

    def to_kv(self) -> str:
        return (
            f"input_bytes={self.input_bytes} mask={self.mask} "
            f"raw_payload_bits={self.raw_bits} abr_payload_bits={self.abr_bits} "
            f"equal={int(self.equal)}"
        )


def demo_compare(data: bytes, mask: StegoMask | str = DEFAULT_MASK) -> CompareReport:
    """Compress ``data`` as-is and after the ABR nibble rewrite."""
    mask = StegoMask(mask)
    raw = huffman_compress(data)
    abr = huffman_compress(embed_bytes(data, mask))
    return CompareReport(len(data), mask, raw.bit_length, abr.bit_length)
