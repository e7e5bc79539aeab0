"""``kaj`` command-line tool.

Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
3 empty message or integrity failure (wrong key, tampered ciphertext,
malformed transform image).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from kaj import codec
from kaj.cipher import CipherParams, decrypt, encrypt
from kaj.cryptanalysis import crack
from kaj.errors import EmptyMessage, FormatError, IntegrityError, InvalidEncoding, InvalidParams, MalformedImage
from kaj.notation import ExpressionSyntaxError, parse_image, parse_time, render_image, render_time
from kaj.transform import invert_expr, transform_expr

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_INTEGRITY = 3

CIPHERTEXT_SUFFIX = ".kajc"
KEY_SUFFIX = ".kajk"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _warn(message: str) -> None:
    print(f"kaj: {message}", file=sys.stderr)


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def run_encrypt(args) -> int:
    try:
        params = CipherParams(beta=args.beta, modulus=args.modulus)
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None
    if args.text is not None:
        message = codec.encode_plaintext(args.text)
    else:
        message = _read(args.infile)
    ct, key = encrypt(message, params)
    ct_path = Path(args.out + CIPHERTEXT_SUFFIX)
    key_path = Path(args.out + KEY_SUFFIX)
    ct_path.write_bytes(codec.serialize_ciphertext(ct))
    key_path.write_bytes(codec.serialize_key(key))
    print(f"n={len(ct)} beta={params.beta} modulus={params.modulus}")
    print(f"ciphertext: {ct_path}")
    print(f"key: {key_path}")
    if args.legacy_view:
        print(f"glyphs: {codec.render_legacy_glyphs(ct)}")
    return EXIT_OK


def run_decrypt(args) -> int:
    ct = codec.parse_ciphertext(_read(args.infile))
    key = codec.parse_key(_read(args.key))
    plain = decrypt(ct, key)
    if args.outfile:
        Path(args.outfile).write_bytes(plain)
        return EXIT_OK
    try:
        print(codec.decode_plaintext(plain))
    except InvalidEncoding as exc:
        _warn(f"{exc}; writing raw bytes")
        sys.stdout.flush()
        sys.stdout.buffer.write(plain)
        sys.stdout.buffer.flush()
    return EXIT_OK


def run_transform(args) -> int:
    try:
        if args.invert:
            print(render_time(invert_expr(parse_image(args.expr))))
        else:
            print(render_image(transform_expr(parse_time(args.expr))))
    except (ExpressionSyntaxError, InvalidParams) as exc:
        raise UsageError(f"cannot parse expression: {exc}") from None
    return EXIT_OK


def _glyph(b: int) -> str:
    if 33 <= b <= 126 and chr(b) not in ",{}\\":
        return chr(b)
    return f"\\x{b:02x}"


def run_crack(args) -> int:
    ct = codec.parse_ciphertext(_read(args.infile))
    report = crack(ct, printable=args.printable)
    for k, found in enumerate(report.sets, start=1):
        body = ",".join(_glyph(b) for b in sorted(found))
        print(f"k={k} candidates={len(found)} {{{body}}}")
        if not found:
            _warn(f"warning: no candidate byte at position {k} (parameters do not match this ciphertext?)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kaj", description="KAJ transform cipher toolkit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    enc = sub.add_parser("encrypt", help="encrypt a message into .kajc/.kajk files")
    source = enc.add_mutually_exclusive_group(required=True)
    source.add_argument("--text", help="plaintext given on the command line")
    source.add_argument("--in", dest="infile", metavar="PATH", help="read plaintext bytes from a file")
    enc.add_argument("--beta", type=int, default=2, help="growth base (default: 2)")
    enc.add_argument("--modulus", type=int, default=500, help="split modulus (default: 500)")
    enc.add_argument("-o", "--out", required=True, metavar="STEM", help="output stem; writes STEM.kajc and STEM.kajk")
    enc.add_argument("--legacy-view", action="store_true", help="also print a glyph rendering of the remainders")
    enc.set_defaults(func=run_encrypt)

    dec = sub.add_parser("decrypt", help="decrypt with a ciphertext file and its key file")
    dec.add_argument("--in", dest="infile", required=True, metavar="PATH")
    dec.add_argument("--key", required=True, metavar="PATH")
    dec.add_argument("--out", dest="outfile", metavar="PATH", help="write plaintext bytes here instead of stdout")
    dec.set_defaults(func=run_decrypt)

    tr = sub.add_parser("transform", help="apply the transform table to an expression")
    tr.add_argument("--invert", action="store_true", help="treat EXPR as an image and invert it")
    tr.add_argument("expr", metavar="EXPR")
    tr.set_defaults(func=run_transform)

    ck = sub.add_parser("crack", help="list candidate plaintext bytes without the key")
    ck.add_argument("--in", dest="infile", required=True, metavar="PATH")
    ck.add_argument("--printable", action="store_true", help="keep only printable ASCII candidates")
    ck.set_defaults(func=run_crack)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _warn(f"error: {exc}")
        return EXIT_USAGE
    except (OSError, FormatError) as exc:
        _warn(f"error: {exc}")
        return EXIT_FORMAT
    except (EmptyMessage, IntegrityError, MalformedImage) as exc:
        _warn(f"error: {exc}")
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
