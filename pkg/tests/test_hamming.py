import itertools

import pytest

from abrnum.core import System
from abrnum.hamming import (
    Codeword7,
    DataNibble,
    correct_steps,
    encode_steps,
    h74_correct,
    h74_encode,
    h74_syndrome,
)
from abrnum.errors import ABRRangeError


def _position_xor(word: int) -> int:
    acc = 0
    for pos in range(1, 8):
        if word >> (pos - 1) & 1:
            acc ^= pos
    return acc


# the 16 valid words: position-xor of set bits is zero
VALID = [w for w in range(128) if _position_xor(w) == 0]


def _nearest(word: int) -> int:
    return min(VALID, key=lambda c: bin(c ^ word).count("1"))


def _data_of(word: int) -> str:
    s = format(word, "07b")
    return s[0] + s[1] + s[2] + s[4]


def test_oracle_sanity():
    assert len(VALID) == 16
    assert sorted(_data_of(w) for w in VALID) == [format(i, "04b") for i in range(16)]


def test_encode_examples():
    assert str(h74_encode(DataNibble("1011", System.ABR))) == "1010101"
    assert str(h74_encode(DataNibble("1101", System.BNS))) == "1100110"
    assert str(h74_encode("0000")) == "0000000"


@pytest.mark.parametrize("d", range(16))
def test_encode_matches_oracle(d):
    word = h74_encode(DataNibble(d)).bits
    assert word in VALID
    assert _data_of(word) == format(d, "04b")
    assert h74_syndrome(Codeword7(word)).error_position == 0


def test_syndrome_examples():
    syn = h74_syndrome("0010101")
    assert (syn.s3, syn.s2, syn.s1) == (1, 1, 1)
    assert str(syn) == "111" and syn.error_position == 7
    assert h74_syndrome("1010101").error_position == 0
    # bit 1 flipped: oracle locates it at position xor
    assert _position_xor(0b1010100) == 1
    assert h74_syndrome("1010100").error_position == 1


def test_correct_flipped_top_bit_of_13():
    fixed, data = h74_correct("0010101", System.ABR)
    assert str(fixed) == "1010101" and str(data) == "1011"
    assert data.value() == 13
    fixed, data = h74_correct("0100110", System.BNS)
    assert str(fixed) == "1100110" and str(data) == "1101"
    assert data.value() == 13


def test_correct_clean_word_unchanged():
    fixed, data = h74_correct("1010101")
    assert str(fixed) == "1010101" and str(data) == "1011"


@pytest.mark.parametrize(
    "value, system, pos", list(itertools.product(range(16), list(System), range(1, 8)))
)
def test_single_flip_sweep(value, system, pos):
    nib = DataNibble.from_value(value, system)
    sent = h74_encode(nib)
    received = sent.flip(pos)
    assert h74_syndrome(received).error_position == pos
    fixed, data = h74_correct(received, system)
    assert fixed == sent
    assert fixed.bits == _nearest(received.bits)
    assert data == nib and data.value() == value


def test_double_error_miscorrects():
    sent = h74_encode("1011")
    received = sent.flip(7).flip(1)
    fixed, _ = h74_correct(received)
    assert fixed != sent
    assert fixed.bits in VALID


def test_validation():
    with pytest.raises(ABRRangeError):
        Codeword7("101")
    with pytest.raises(ABRRangeError):
        DataNibble("10a1")
    with pytest.raises(ABRRangeError):
        Codeword7(0).flip(8)


def test_step_table_rows():
    steps = encode_steps(13, "bns")
    assert steps[0] == ("Represent 13 in data bits", "1 1 0 1")
    assert steps[4][1] == "1 1 0 p3 1 p2 p1"
    assert [v for _, v in steps[5:8]] == ["0", "1", "0"]
    assert steps[-1][1] == "1 1 0 0 1 1 0"

    rows = dict(correct_steps(13, "abr", 7))
    assert rows["Received parity and data bits"] == "0 0 1 0 1 0 1"
    assert rows["Calculate syndrome bit s1"] == "1"
    assert rows["Error in bit position"] == "7"
    assert rows["Corrected data bits"] == "1 0 1 1"
    assert rows["Do the data bits represent 13?"] == "YES"
