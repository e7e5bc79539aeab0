"""Plaintext codec and the text file formats for ciphertexts and keys.

Ciphertext file::

    KAJ1 CIPHERTEXT
    beta=2
    modulus=500
    n=11
    r=138,436,128,180,360,176,52,132,260,460,112

Key file::

    KAJ1 KEY
    n=11
    q=0,1,8,23,78,212,559,1419,3179,8785,22708

ASCII, LF after every line, no trailing whitespace, keys in exactly this
order.  Parsing is strict so that re-serializing any accepted file gives
back the same bytes.
"""

from __future__ import annotations

import re

from kaj.cipher import CipherParams, Ciphertext, KeyStream
from kaj.errors import FormatError, InvalidEncoding, KajError

CIPHERTEXT_HEADER = "KAJ1 CIPHERTEXT"
KEY_HEADER = "KAJ1 KEY"

_CIPHERTEXT_KEYS = ("beta", "modulus", "n", "r")
_KEY_KEYS = ("n", "q")
_DECIMAL = re.compile(r"0|[1-9][0-9]*")
# below CPython's default int/str conversion limit (4300 digits)
_CHUNK = 4000
_CHUNK_LIMIT = 10**_CHUNK


def to_decimal(x: int) -> str:
    """``str(x)`` for nonnegative ints of any size."""
    if x < _CHUNK_LIMIT:
        return str(x)
    half = (x.bit_length() * 3 // 10) // 2
    high, low = divmod(x, 10**half)
    return to_decimal(high) + to_decimal(low).zfill(half)


def from_decimal(digits: str) -> int:
    """``int(digits)`` for digit strings of any length."""
    if len(digits) <= _CHUNK:
        return int(digits)
    half = len(digits) // 2
    return from_decimal(digits[:-half]) * 10**half + from_decimal(digits[-half:])


def encode_plaintext(text: str) -> bytes:
    """UTF-8 bytes of ``text``; ASCII characters map to their codes."""
    return text.encode("utf-8")


def decode_plaintext(data: bytes) -> str:
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(f"not valid UTF-8 text: {exc.reason} at byte {exc.start}") from None


def _lines(stream: bytes, header: str, keys: tuple[str, ...]) -> list[str]:
    if isinstance(stream, str):
        stream = stream.encode("utf-8")
    try:
        text = bytes(stream).decode("ascii")
    except UnicodeDecodeError as exc:
        line = stream.count(b"\n", 0, exc.start) + 1
        raise FormatError("non-ASCII byte", line) from None
    if not text:
        raise FormatError("empty file", 1)
    if not text.endswith("\n"):
        raise FormatError("missing final newline", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    for i, line in enumerate(lines, start=1):
        if "\r" in line:
            raise FormatError("CR characters are not allowed (use LF line endings)", i)
        if line != line.rstrip() or line != line.lstrip():
            raise FormatError("leading or trailing whitespace", i)
    if lines[0] != header:
        raise FormatError(f"bad header {lines[0]!r}, expected {header!r}", 1)
    expected = len(keys) + 1
    if len(lines) > expected:
        raise FormatError("unexpected extra line", expected + 1)
    return lines


def _fields(lines: list[str], keys: tuple[str, ...]) -> dict[str, str]:
    seen: dict[str, str] = {}
    for offset, want in enumerate(keys):
        lineno = offset + 2
        if lineno > len(lines):
            raise FormatError(f"missing '{want}=' line", lineno)
        line = lines[lineno - 1]
        name, eq, value = line.partition("=")
        if not eq:
            raise FormatError(f"expected 'key=value', got {line!r}", lineno)
        if name in seen:
            raise FormatError(f"duplicate key {name!r}", lineno)
        if name not in keys:
            raise FormatError(f"unknown key {name!r}", lineno)
        if name != want:
            raise FormatError(f"key {name!r} out of order, expected {want!r}", lineno)
        seen[name] = value
    return seen


def _decimal(value: str, what: str, lineno: int) -> int:
    if not _DECIMAL.fullmatch(value):
        raise FormatError(f"{what} is not a canonical decimal integer: {value!r}", lineno)
    return from_decimal(value)


def _decimal_list(value: str, what: str, lineno: int) -> list[int]:
    if value == "":
        return []
    return [_decimal(item, f"{what} entry", lineno) for item in value.split(",")]


def serialize_ciphertext(ct: Ciphertext) -> bytes:
    if not len(ct):
        raise FormatError("a ciphertext file needs at least one remainder")
    p = ct.params
    lines = [
        CIPHERTEXT_HEADER,
        f"beta={to_decimal(p.beta)}",
        f"modulus={to_decimal(p.modulus)}",
        f"n={len(ct)}",
        "r=" + ",".join(to_decimal(r) for r in ct.remainders),
    ]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_ciphertext(stream: bytes) -> Ciphertext:
    lines = _lines(stream, CIPHERTEXT_HEADER, _CIPHERTEXT_KEYS)
    f = _fields(lines, _CIPHERTEXT_KEYS)
    beta = _decimal(f["beta"], "beta", 2)
    modulus = _decimal(f["modulus"], "modulus", 3)
    n = _decimal(f["n"], "n", 4)
    rs = _decimal_list(f["r"], "r", 5)
    if beta < 1:
        raise FormatError("beta must be >= 1", 2)
    if modulus < 2:
        raise FormatError("modulus must be >= 2", 3)
    if n < 1:
        raise FormatError("n must be >= 1", 4)
    if len(rs) != n:
        raise FormatError(f"n={n} but {len(rs)} remainders listed", 5)
    for k, r in enumerate(rs, start=1):
        if r >= modulus:
            raise FormatError(f"r_{k} = {r} is not below modulus {modulus}", 5)
    try:
        return Ciphertext(tuple(rs), CipherParams(beta=beta, modulus=modulus))
    except KajError as exc:  # pragma: no cover - guarded above
        raise FormatError(str(exc)) from None


def serialize_key(key: KeyStream) -> bytes:
    if not len(key):
        raise FormatError("a key file needs at least one quotient")
    lines = [KEY_HEADER, f"n={len(key)}", "q=" + ",".join(to_decimal(q) for q in key.quotients)]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_key(stream: bytes) -> KeyStream:
    lines = _lines(stream, KEY_HEADER, _KEY_KEYS)
    f = _fields(lines, _KEY_KEYS)
    n = _decimal(f["n"], "n", 2)
    qs = _decimal_list(f["q"], "q", 3)
    if n < 1:
        raise FormatError("n must be >= 1", 2)
    if len(qs) != n:
        raise FormatError(f"n={n} but {len(qs)} quotients listed", 3)
    return KeyStream(tuple(qs))


def render_legacy_glyphs(ct: Ciphertext) -> str:
    """Display-only view of the remainders as one glyph per byte.

    Each remainder is reduced mod 256; printable ASCII passes through and
    everything else (including the backslash) becomes a ``\\xNN`` escape.
    This does not try to reproduce any particular code page.
    """
    out = []
    for r in ct.remainders:
        b = r % 256
        out.append(chr(b) if 32 <= b <= 126 and b != 0x5C else f"\\x{b:02x}")
    return "".join(out)
