"""Base, codec and bit-usage tables rendered from the live codec."""
from __future__ import annotations

import io
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TextIO

from .core import ORACLE_MAX_WIDTH, abr_encode, bns_encode, check_width, compute_bases
from .errors import ABRRangeError
from .verify import popcount_profile

FORMATS = ("plain", "csv", "markdown")
CODEC_MAX_WIDTH = 16


@dataclass
class TableDocument:
    title: str
    headers: tuple[str, ...]
    rows: Sequence[Sequence[str]]

    def __post_init__(self):
        # lazy row sources are trusted to match the header
        if isinstance(self.rows, list):
            for k, row in enumerate(self.rows):
                if len(row) != len(self.headers):
                    raise ValueError(
                        f"row {k} has {len(row)} cells, header has {len(self.headers)}"
                    )

    def write(self, out: TextIO, fmt: str = "plain") -> None:
        if fmt == "csv":
            out.write(",".join(self.headers) + "\n")
            for row in self.rows:
                out.write(",".join(row) + "\n")
        elif fmt == "markdown":
            out.write("| " + " | ".join(self.headers) + " |\n")
            out.write("|" + "|".join("---" for _ in self.headers) + "|\n")
            for row in self.rows:
                out.write("| " + " | ".join(row) + " |\n")
        elif fmt == "plain":
            widths = [len(h) for h in self.headers]
            for row in self.rows:
                widths = [max(w, len(c)) for w, c in zip(widths, row)]
            out.write("  ".join(h.ljust(w) for h, w in zip(self.headers, widths)).rstrip() + "\n")
            for row in self.rows:
                out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
        else:
            raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")

    def render(self, fmt: str = "plain") -> str:
        buf = io.StringIO()
        self.write(buf, fmt)
        return buf.getvalue()


def emit_base_table(n: int) -> TableDocument:
    bases = compute_bases(n)
    rows = [[str(i), str(1 << i), str(b)] for i, b in enumerate(bases)]
    return TableDocument(
        f"Base values in BNS and ABR, n = {n}",
        ("index", "bns_base", "abr_base"),
        rows,
    )


def emit_codec_table(n: int) -> TableDocument:
    n = check_width(n)
    if n > CODEC_MAX_WIDTH:
        raise ABRRangeError(f"width {n} exceeds the codec table guard {CODEC_MAX_WIDTH}")
    rows = [
        [str(v), str(bns_encode(v, n)), str(abr_encode(v, n))] for v in range(1 << n)
    ]
    return TableDocument(
        f"Decimal, binary and ABR encodings, n = {n}",
        ("decimal", "binary", "abr"),
        rows,
    )


class _ProfileRows(Sequence):
    def __init__(self, profile):
        self._abr = profile.abr_popcount
        self._bns = profile.bns_popcount

    def __len__(self):
        return len(self._abr)

    def __getitem__(self, v):
        if isinstance(v, slice):
            return [self[k] for k in range(*v.indices(len(self)))]
        if v < 0:
            v += len(self)
        if not 0 <= v < len(self):
            raise IndexError(v)
        return [str(v), str(int(self._abr[v])), str(int(self._bns[v]))]

    def __iter__(self):
        for v, (a, b) in enumerate(zip(self._abr.tolist(), self._bns.tolist())):
            yield [str(v), str(a), str(b)]


def emit_profile_csv(n: int) -> TableDocument:
    n = check_width(n)
    if n > ORACLE_MAX_WIDTH:
        raise ABRRangeError(f"width {n} exceeds the profile guard {ORACLE_MAX_WIDTH}")
    return TableDocument(
        f"Bit usage per value, n = {n}",
        ("value", "abr_popcount", "bns_popcount"),
        _ProfileRows(popcount_profile(n)),
    )
