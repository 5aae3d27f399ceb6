"""Exception types shared across the package."""


class ABRError(Exception):
    """Base class for domain errors raised by abrnum."""


class ABRRangeError(ABRError, ValueError):
    """A width, value, index or guard bound was violated."""


class TheoremViolation(ABRError, RuntimeError):
    """An exhaustive sweep found a collision or an unrepresented value.

    Never expected to fire for the real base sequence; it exists so the
    oracle fails loudly instead of returning an arbitrary match.
    """


class HuffmanDecodeError(ABRError, ValueError):
    """Malformed Huffman container or bitstream."""

    def __init__(self, message: str, bit_offset: int | None = None):
        if bit_offset is not None:
            message = f"{message} (at bit offset {bit_offset})"
        super().__init__(message)
        self.bit_offset = bit_offset
