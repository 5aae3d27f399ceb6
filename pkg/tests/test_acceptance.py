"""Exit criteria, one test each; a PASS/FAIL line per criterion is printed
in the terminal summary."""
import io
import itertools
import random
import time
from contextlib import contextmanager

from abrnum.cli import run
from abrnum.core import abr_decode, compute_bases
from abrnum.hamming import DataNibble, h74_correct, h74_encode, h74_syndrome
from abrnum.huffman import decompress_bytes, compress_bytes, huffman_compress
from abrnum.stego import StegoMask, embed_byte, embed_bytes, embed_stream, extract_byte, extract_stream
from abrnum.verify import cross_check_encoders, popcount_profile, verify_range
from conftest import ACCEPTANCE_LINES, reference_inverse

BASES_N16 = [2, 3, 4, 12, 16, 48, 64, 192, 256, 768, 1024, 3072, 4096, 12288, 16384, 49152]


@contextmanager
def criterion(number, text):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"C{number} FAIL  {text}")
        raise
    ACCEPTANCE_LINES.append(
        f"C{number} PASS  {text} ({time.perf_counter() - start:.2f} s)"
    )


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_c1_bases_width_16():
    with criterion(1, "bases --width 16 equals the 16 published base values"):
        start = time.perf_counter()
        code, out = cli("bases", "--width", "16")
        elapsed = time.perf_counter() - start
        assert code == 0
        assert [int(x) for x in out.split()] == BASES_N16
        assert elapsed < 1.0


def test_c2_codec_table_width_4(golden_dir):
    with criterion(2, "table --which codec --width 4 equals all 16 published rows"):
        start = time.perf_counter()
        code, out = cli("table", "--which", "codec", "--width", "4", "--format", "csv")
        elapsed = time.perf_counter() - start
        assert code == 0
        assert out == (golden_dir / "codec_n4.csv").read_text()
        rows = {line.split(",")[0]: line for line in out.splitlines()[1:]}
        assert rows["13"] == "13,1101,1011"
        assert elapsed < 1.0


def test_c3_bijection_widths_1_to_20():
    with criterion(3, "verify --min 1 --max 20: bijection and uniqueness at every width"):
        start = time.perf_counter()
        reports = verify_range(1, 20, jobs=1)
        elapsed = time.perf_counter() - start
        assert [r.width for r in reports] == list(range(1, 21))
        for r in reports:
            n = r.width
            assert r.distinct_values == 2**n
            assert (r.min_value, r.max_value) == (0, 2**n - 1)
            assert r.duplicate_count == 0 and r.missing_count == 0
            assert r.passed
        assert elapsed < 60.0
        code, out = cli("verify", "--min", "1", "--max", "20", "--jobs", "1", "--format", "kv")
        assert code == 0 and out.splitlines()[-1] == "all_pass=1 widths=20"


def test_c4_encoder_agreement():
    with criterion(4, "fast encoder == exhaustive oracle for all v, n <= 16 (131070 cases)"):
        cases = 0
        for n in range(1, 17):
            assert cross_check_encoders(n)
            cases += 2**n
        assert cases == 131_070


def test_c5_hamming_traces():
    with criterion(5, "Hamming(7,4) parity, syndrome and 224-case single-flip sweep"):
        assert str(h74_encode(DataNibble.from_value(13, "bns"))) == "1100110"
        assert str(h74_encode(DataNibble.from_value(13, "abr"))) == "1010101"
        for system, sent, data in (("bns", "1100110", "1101"), ("abr", "1010101", "1011")):
            received = h74_encode(DataNibble(data)).flip(7)
            syn = h74_syndrome(received)
            assert str(syn) == "111" and syn.error_position == 7
            fixed, nib = h74_correct(received, system)
            assert str(fixed) == sent and str(nib) == data and nib.value() == 13
        recovered = 0
        for value, system, pos in itertools.product(range(16), ("abr", "bns"), range(1, 8)):
            nib = DataNibble.from_value(value, system)
            sent = h74_encode(nib)
            fixed, got = h74_correct(sent.flip(pos), system)
            assert fixed == sent and got == nib and got.value() == value
            recovered += 1
        assert recovered == 224


def test_c6_stego(tmp_path):
    with criterion(6, "stego: 256 bytes x 4 masks, stream round trip, mask none is identity"):
        for mask in StegoMask:
            for b in range(256):
                assert extract_byte(embed_byte(b, mask), mask) == b
        sample = bytes(range(256)) * 64 + b"ABR sample file\n" * 100
        src = tmp_path / "sample.bin"
        src.write_bytes(sample)
        for mask in StegoMask:
            mid, back = tmp_path / f"{mask}.stego", tmp_path / f"{mask}.back"
            with open(src, "rb") as a, open(mid, "wb") as b:
                embed_stream(a, b, mask)
            with open(mid, "rb") as a, open(back, "wb") as b:
                extract_stream(a, b, mask)
            assert back.read_bytes() == sample
            assert mid.stat().st_size == len(sample)
            if mask is StegoMask.NONE:
                assert mid.read_bytes() == sample
        code, _ = cli("stego", "embed", "--in", str(src), "--out", str(tmp_path / "cli"),
                      "--mask", "none")
        assert code == 0 and (tmp_path / "cli").read_bytes() == sample


def test_c7_compression():
    with criterion(7, "Huffman round trips; ABR-transformed payload bit-length equals raw"):
        rng = random.Random(2024)
        text = (
            b"Every integer representable in n binary digits is representable "
            b"in n adaptive-base digits, and conversely.\n"
        ) * 2000
        random_mib = rng.randbytes(1 << 20)
        for data in (b"", b"z" * 1000, text, random_mib):
            assert decompress_bytes(compress_bytes(data)) == data
        skewed = bytes(min(255, int(rng.expovariate(0.05))) for _ in range(300_000))
        corpora = {"text": text, "random": random_mib, "skewed": skewed}
        for name, data in corpora.items():
            raw = huffman_compress(data).bit_length
            for mask in (StegoMask.LOW_ABR, StegoMask.HIGH_ABR, StegoMask.BOTH_ABR):
                hidden = embed_bytes(data, mask)
                assert hidden != data
                assert huffman_compress(hidden).bit_length == raw, (name, mask)


def test_c8_full_usage_midpoint():
    with criterion(8, "all-ones ABR value = (2^(n+1)-5)/3 in [2^(n-1), 2^(n-1)+2^(n-2)), even n 4..20"):
        for n in (4, 6, 8):
            inv = reference_inverse(n)
            assert inv[(2 ** (n + 1) - 5) // 3] == "1" * n
        for n in range(4, 21, 2):
            prof = popcount_profile(n)
            full = prof.full_usage_values().tolist()
            value = (2 ** (n + 1) - 5) // 3
            assert full == [value]
            assert abr_decode("1" * n) == value
            assert 2 ** (n - 1) <= value < 2 ** (n - 1) + 2 ** (n - 2)


def test_c9_closed_form_bases():
    with criterion(9, "n = 62 bases: 2^i at even i >= 2, 3*2^(i-1) at odd i"):
        bases = compute_bases(62)
        # independent literal recursion
        rec = [2, 3]
        for i in range(2, 62):
            rec.append(2 ** (i + 1) - 1 - sum(rec[j] for j in range(1, i, 2)))
        assert list(bases) == rec
        for i in range(62):
            if i % 2 == 0 and i >= 2:
                assert bases[i] == 2**i
            elif i % 2 == 1:
                assert bases[i] == 3 * 2 ** (i - 1)
        assert all(bases[i] == 2**i for i in range(2, 62, 2))
