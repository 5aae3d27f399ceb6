"""Command-line front end: ``abr <subcommand> ...``.

Exit codes: 0 success, 1 domain error (range, decode, failed verification),
2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__, hamming, huffman, stego, tables, verify
from .core import BitString, System, compute_bases, decode, encode
from .errors import ABRError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _cmd_bases(args, out):
    bases = compute_bases(args.width)
    if args.format == "plain":
        out.write("\n".join(map(str, bases)) + "\n")
    else:
        doc = tables.TableDocument(
            f"ABR bases, n = {args.width}",
            ("index", "abr_base"),
            [[str(i), str(b)] for i, b in enumerate(bases)],
        )
        doc.write(out, args.format)


def _cmd_encode(args, out):
    out.write(f"{encode(args.value, args.width, args.system)}\n")


def _cmd_decode(args, out):
    out.write(f"{decode(BitString.from_str(args.bits), args.system)}\n")


def _cmd_table(args, out):
    if args.which == "bases":
        doc = tables.emit_base_table(args.width)
    else:
        doc = tables.emit_codec_table(args.width)
    doc.write(out, args.format)


def _cmd_verify(args, out):
    jobs = args.jobs if args.jobs else verify.default_jobs()
    reports = verify.verify_range(args.min, args.max, jobs=jobs)
    for r in reports:
        out.write((r.to_kv() if args.format == "kv" else r.summary()) + "\n")
    ok = verify.all_passed(reports)
    if args.format == "kv":
        out.write(f"all_pass={int(ok)} widths={len(reports)}\n")
    else:
        out.write(f"{'ALL PASS' if ok else 'FAILED'}: widths {args.min}..{args.max}\n")
    return EXIT_OK if ok else EXIT_DOMAIN


def _cmd_profile(args, out):
    doc = tables.emit_profile_csv(args.width)
    with open(args.out, "w", newline="\n") as fh:
        doc.write(fh, "csv")
    print(f"wrote {len(doc.rows)} rows to {args.out}", file=sys.stderr)


def _print_steps(out, title, system, rows):
    doc = tables.TableDocument(
        title,
        ("step", "description", f"{system.value.upper()} number system"),
        [[str(k), desc, val] for k, (desc, val) in enumerate(rows, 1)],
    )
    out.write(f"{title}\n")
    doc.write(out, "plain")


def _cmd_hamming(args, out):
    if args.action == "demo":
        if args.value is None:
            raise ABRError("hamming demo requires --value")
        system = System(args.system)
        _print_steps(
            out,
            f"Parity calculation (even parity) for {args.value}",
            system,
            hamming.encode_steps(args.value, system),
        )
        if args.flip is not None:
            out.write("\n")
            _print_steps(
                out,
                f"Error correction after flipping position {args.flip}",
                system,
                hamming.correct_steps(args.value, system, args.flip),
            )
    elif args.action == "encode":
        out.write(f"{hamming.h74_encode(hamming.DataNibble(args.bits))}\n")
    else:
        received = hamming.Codeword7(args.bits)
        fixed, data = hamming.h74_correct(received)
        pos = hamming.h74_syndrome(received).error_position
        out.write(f"{fixed} {data}\n")
        print(f"syndrome error position: {pos}", file=sys.stderr)


def _cmd_stego(args, out):
    fn = stego.embed_stream if args.action == "embed" else stego.extract_stream
    with open(args.infile, "rb") as src, open(args.outfile, "wb") as dst:
        count = fn(src, dst, args.mask)
    print(f"{args.action}: {count} bytes, mask {args.mask}", file=sys.stderr)


def _cmd_huffman(args, out):
    with open(args.infile, "rb") as fh:
        data = fh.read()
    if args.action == "compare":
        out.write(huffman.demo_compare(data, args.mask).to_kv() + "\n")
        return
    if args.outfile is None:
        raise ABRError(f"huffman {args.action} requires --out")
    fn = huffman.compress_bytes if args.action == "compress" else huffman.decompress_bytes
    result = fn(data)
    with open(args.outfile, "wb") as fh:
        fh.write(result)
    print(f"{args.action}: {len(data)} -> {len(result)} bytes", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abr", description="Adaptive Base Representation codec and tools."
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    masks = [m.value for m in stego.StegoMask]
    systems = [s.value for s in System]

    s = sub.add_parser("bases", help="print the ABR base sequence")
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--format", choices=tables.FORMATS, default="plain")
    s.set_defaults(func=_cmd_bases)

    s = sub.add_parser("encode", help="encode a value")
    s.add_argument("value", type=int)
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--system", choices=systems, default="abr")
    s.set_defaults(func=_cmd_encode)

    s = sub.add_parser("decode", help="decode a bit string (width = its length)")
    s.add_argument("bits")
    s.add_argument("--system", choices=systems, default="abr")
    s.set_defaults(func=_cmd_decode)

    s = sub.add_parser("table", help="render the base or codec table")
    s.add_argument("--which", choices=("bases", "codec"), required=True)
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--format", choices=tables.FORMATS, default="plain")
    s.set_defaults(func=_cmd_table)

    s = sub.add_parser("verify", help="exhaustively check widths min..max")
    s.add_argument("--min", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")
    s.add_argument("--format", choices=("plain", "kv"), default="plain")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("profile", help="write per-value popcounts as CSV")
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_profile)

    s = sub.add_parser("hamming", help="Hamming(7,4) demo, encode, correct")
    s.add_argument("action", choices=("demo", "encode", "correct"))
    s.add_argument("bits", nargs="?")
    s.add_argument("--value", type=int)
    s.add_argument("--system", choices=systems, default="abr")
    s.add_argument("--flip", type=int)
    s.set_defaults(func=_cmd_hamming)

    s = sub.add_parser("stego", help="nibble-level ABR/binary byte transform")
    s.add_argument("action", choices=("embed", "extract"))
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out", dest="outfile", required=True)
    s.add_argument("--mask", choices=masks, default=stego.DEFAULT_MASK.value)
    s.set_defaults(func=_cmd_stego)

    s = sub.add_parser("huffman", help="Huffman container and ABR comparison")
    s.add_argument("action", choices=("compress", "decompress", "compare"))
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out", dest="outfile")
    s.add_argument("--mask", choices=masks, default=stego.DEFAULT_MASK.value)
    s.set_defaults(func=_cmd_huffman)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "hamming" and args.action in ("encode", "correct") and not args.bits:
        parser.print_usage(sys.stderr)
        print(f"abr hamming {args.action}: BITS argument required", file=sys.stderr)
        return EXIT_USAGE
    try:
        code = args.func(args, out)
    except OSError as exc:
        print(f"abr: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ABRError, ValueError) as exc:
        print(f"abr: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run())
