"""Hamming(7,4) with even parity, laid out as ``d4 d3 d2 p3 d1 p2 p1``.

Positions are numbered 7 (leftmost) down to 1. Parity bit ``p_k`` sits at
position ``2**(k-1)`` and covers the positions whose index has bit
``k-1`` set, so the syndrome read as ``s3 s2 s1`` is the position of a
single flipped bit. The data nibble may hold an ABR or a binary encoding;
the code never looks at what the bits mean.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import BitString, System, decode, encode
from .errors import ABRRangeError

# position -> role, for rendering
LAYOUT = ("d4", "d3", "d2", "p3", "d1", "p2", "p1")
DATA_POSITIONS = {"d4": 7, "d3": 6, "d2": 5, "d1": 3}
PARITY_GROUPS = {
    1: (1, 3, 5, 7),
    2: (2, 3, 6, 7),
    3: (4, 5, 6, 7),
}


def _parse_bits(bits, width: int, what: str) -> int:
    if isinstance(bits, str):
        text = bits.strip()
        if len(text) != width or set(text) - {"0", "1"}:
            raise ABRRangeError(f"{what} must be exactly {width} bits, got {bits!r}")
        return int(text, 2)
    bits = int(bits)
    if not 0 <= bits < (1 << width):
        raise ABRRangeError(f"{what} must be in [0, {(1 << width) - 1}], got {bits}")
    return bits


@dataclass(frozen=True)
class DataNibble:
    """Four data bits ``d4 d3 d2 d1`` (``d4`` most significant)."""

    bits: int
    system: System | None = None

    def __post_init__(self):
        object.__setattr__(self, "bits", _parse_bits(self.bits, 4, "data nibble"))
        if self.system is not None:
            object.__setattr__(self, "system", System(self.system))

    @classmethod
    def from_value(cls, v: int, system: System | str) -> DataNibble:
        return cls(encode(v, 4, system).pattern, System(system))

    def bit(self, name: str) -> int:
        return (self.bits >> (int(name[1]) - 1)) & 1

    def value(self) -> int:
        if self.system is None:
            raise ValueError("nibble has no number system tag")
        return decode(BitString(self.bits, 4), self.system)

    def __str__(self) -> str:
        return format(self.bits, "04b")


@dataclass(frozen=True)
class Codeword7:
    """Seven-bit block; bit ``pos - 1`` of ``bits`` holds position ``pos``."""

    bits: int

    def __post_init__(self):
        object.__setattr__(self, "bits", _parse_bits(self.bits, 7, "codeword"))

    def at(self, pos: int) -> int:
        if not 1 <= pos <= 7:
            raise ABRRangeError(f"bit position {pos} out of range: must be in [1, 7]")
        return (self.bits >> (pos - 1)) & 1

    def flip(self, pos: int) -> Codeword7:
        self.at(pos)
        return Codeword7(self.bits ^ (1 << (pos - 1)))

    def data(self, system: System | str | None = None) -> DataNibble:
        d = 0
        for name, pos in DATA_POSITIONS.items():
            d |= self.at(pos) << (int(name[1]) - 1)
        return DataNibble(d, system)

    def __str__(self) -> str:
        return format(self.bits, "07b")


@dataclass(frozen=True)
class Syndrome:
    s1: int
    s2: int
    s3: int

    @property
    def error_position(self) -> int:
        return self.s3 * 4 + self.s2 * 2 + self.s1

    def __str__(self) -> str:
        return f"{self.s3}{self.s2}{self.s1}"


def _parity(word: Codeword7, positions) -> int:
    acc = 0
    for pos in positions:
        acc ^= word.at(pos)
    return acc


def h74_encode(d: DataNibble | str | int) -> Codeword7:
    """Place the data bits and set each parity bit for even parity.

    >>> str(h74_encode(DataNibble("1011")))
    '1010101'
    """
    if not isinstance(d, DataNibble):
        d = DataNibble(d)
    word = 0
    for name, pos in DATA_POSITIONS.items():
        word |= d.bit(name) << (pos - 1)
    cw = Codeword7(word)
    for k, group in PARITY_GROUPS.items():
        if _parity(cw, group):
            cw = cw.flip(1 << (k - 1))
    return cw


def h74_syndrome(c: Codeword7 | str) -> Syndrome:
    if not isinstance(c, Codeword7):
        c = Codeword7(c)
    s = [_parity(c, PARITY_GROUPS[k]) for k in (1, 2, 3)]
    return Syndrome(*s)


def h74_correct(
    c: Codeword7 | str, system: System | str | None = None
) -> tuple[Codeword7, DataNibble]:
    """Flip the bit the syndrome points at, if any, and extract the data.

    Two flipped bits produce a wrong but valid-looking codeword; the layout
    has no overall parity bit to detect that.
    """
    if not isinstance(c, Codeword7):
        c = Codeword7(c)
    pos = h74_syndrome(c).error_position
    fixed = c.flip(pos) if pos else c
    return fixed, fixed.data(system)


def encode_steps(value: int, system: System | str) -> list[tuple[str, str]]:
    """Rows of the parity-calculation walkthrough for one value."""
    nib = DataNibble.from_value(value, system)
    cw = h74_encode(nib)
    sp = lambda s: " ".join(s)  # noqa: E731
    placed = " ".join(
        str(nib.bit(role)) if role.startswith("d") else role for role in LAYOUT
    )
    return [
        (f"Represent {value} in data bits", sp(str(nib))),
        ("Order of data bits", "d4 d3 d2 d1"),
        ("Position of parity and data bits", " ".join(LAYOUT)),
        ("Bit level index", "7, 6, 5, 4, 3, 2, 1"),
        ("Parity and data bits", placed),
        ("Value of p1", str(cw.at(1))),
        ("Value of p2", str(cw.at(2))),
        ("Value of p3", str(cw.at(4))),
        ("Parity and data bits", sp(str(cw))),
    ]


def correct_steps(value: int, system: System | str, flip: int) -> list[tuple[str, str]]:
    """Rows of the error-correction walkthrough after flipping one position."""
    system = System(system)
    sent = h74_encode(DataNibble.from_value(value, system))
    received = sent.flip(flip)
    syn = h74_syndrome(received)
    fixed, nib = h74_correct(received, system)
    sp = lambda s: " ".join(s)  # noqa: E731
    deps = {1: "d4, d2, d1, p1", 2: "d4, d3, d1, p2", 3: "d4, d3, d2, p3"}
    rows = [
        ("Received parity and data bits", sp(str(received))),
        ("Position of parity and data bits", " ".join(LAYOUT)),
        ("Bit level index", "7, 6, 5, 4, 3, 2, 1"),
    ]
    for k, s in zip((1, 2, 3), (syn.s1, syn.s2, syn.s3)):
        rows.append((f"Syndrome bit s{k} depends on", deps[k]))
        rows.append((f"Calculate syndrome bit s{k}", str(s)))
    rows += [
        ("Error in bit position", str(syn.error_position)),
        ("Updated parity and data bits", sp(str(fixed))),
        ("Corrected data bits", sp(str(nib))),
        (f"Do the data bits represent {value}?", "YES" if nib.value() == value else "NO"),
    ]
    return rows
