"""Encryption and decryption with the KAJ carrier polynomial.

Each plaintext byte ``F_k`` (1-based position ``k``) becomes the image
coefficient ``M_k = F_k * beta^(k-1) * k * (k+1)``: the numerator of the
``1/c^(m+k+2)`` term in the transform of ``F t^2 e^{beta t}``.  The public
ciphertext is ``M_k mod N``; the quotient ``M_k // N`` is the secret key.

Arbitrary-precision ints throughout.  ``M_k`` grows like ``beta^k`` and
passes 64 bits after a handful of bytes for any ``beta >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from kaj.errors import (
    ByteRangeError,
    DivisibilityError,
    EmptyMessage,
    InvalidParams,
    LengthMismatch,
    RemainderOutOfRange,
)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class CipherParams:
    """Public parameters: growth base ``beta`` and split modulus."""

    beta: int = 2
    modulus: int = 500

    def __post_init__(self):
        if not _is_int(self.beta) or self.beta < 1:
            raise InvalidParams(f"beta must be an integer >= 1, got {self.beta!r}")
        if not _is_int(self.modulus) or self.modulus < 2:
            raise InvalidParams(f"modulus must be an integer >= 2, got {self.modulus!r}")


DEFAULT_PARAMS = CipherParams(beta=2, modulus=500)


@dataclass(frozen=True)
class Ciphertext:
    remainders: tuple[int, ...]
    params: CipherParams = field(default=DEFAULT_PARAMS)

    def __post_init__(self):
        rs = tuple(self.remainders)
        object.__setattr__(self, "remainders", rs)
        n = self.params.modulus
        for k, r in enumerate(rs, start=1):
            if not _is_int(r) or not 0 <= r < n:
                raise RemainderOutOfRange(f"r_{k} = {r!r} outside [0, {n})")

    def __len__(self):
        return len(self.remainders)


@dataclass(frozen=True)
class KeyStream:
    quotients: tuple[int, ...]

    def __post_init__(self):
        qs = tuple(self.quotients)
        object.__setattr__(self, "quotients", qs)
        for k, q in enumerate(qs, start=1):
            if not _is_int(q) or q < 0:
                raise InvalidParams(f"q_{k} = {q!r} must be a nonnegative integer")

    def __len__(self):
        return len(self.quotients)


def position_multiplier(k: int, beta: int) -> int:
    """``beta^(k-1) * k * (k+1)``, the factor byte ``k`` is scaled by."""
    return beta ** (k - 1) * k * (k + 1)


def image_coefficients(message: Sequence[int] | bytes, params: CipherParams) -> list[int]:
    """Closed-form image coefficients ``M_1..M_n`` of a message.

    >>> image_coefficients(b"AB", CipherParams(beta=3))
    [130, 1188]
    """
    data = bytes(message)
    if not data:
        raise EmptyMessage("message must contain at least one byte")
    beta = params.beta
    out = []
    power = 1
    for k, byte in enumerate(data, start=1):
        out.append(byte * power * k * (k + 1))
        power *= beta
    return out


def mod_split(m: int, modulus: int) -> tuple[int, int]:
    """Euclidean split ``m = modulus * q + r`` with ``0 <= r < modulus``."""
    if m < 0:
        raise ValueError(f"coefficient must be nonnegative, got {m}")
    if modulus < 2:
        raise InvalidParams(f"modulus must be >= 2, got {modulus}")
    return divmod(m, modulus)


def mod_join(q: int, r: int, modulus: int) -> int:
    if not 0 <= r < modulus:
        raise RemainderOutOfRange(f"remainder {r} outside [0, {modulus})")
    if q < 0:
        raise ValueError(f"quotient must be nonnegative, got {q}")
    return modulus * q + r


def recover_symbol(m: int, k: int, beta: int) -> int:
    """Undo the position scaling of ``M_k`` and return the plaintext byte."""
    if k < 1:
        raise ValueError(f"positions are 1-based, got {k}")
    divisor = position_multiplier(k, beta)
    value, rest = divmod(m, divisor)
    if rest:
        raise DivisibilityError(f"M_{k} = {m} is not a multiple of {divisor}")
    if not 0 <= value <= 255:
        raise ByteRangeError(f"position {k} decodes to {value}, outside 0..255")
    return value


def encrypt(message: Sequence[int] | bytes, params: CipherParams = DEFAULT_PARAMS) -> tuple[Ciphertext, KeyStream]:
    coeffs = image_coefficients(message, params)
    quotients, remainders = [], []
    for m in coeffs:
        q, r = mod_split(m, params.modulus)
        quotients.append(q)
        remainders.append(r)
    return Ciphertext(tuple(remainders), params), KeyStream(tuple(quotients))


def decrypt(ct: Ciphertext, key: KeyStream, params: CipherParams | None = None) -> bytes:
    """Recover the plaintext bytes from ciphertext and quotient key.

    ``params`` defaults to the ones carried by the ciphertext.  A wrong key
    or tampered remainder almost always trips the divisibility or byte-range
    check and raises an :class:`~kaj.errors.IntegrityError` subclass.
    """
    params = ct.params if params is None else params
    if len(ct) != len(key):
        raise LengthMismatch(f"ciphertext has {len(ct)} remainders but key has {len(key)} quotients")
    if not len(ct):
        raise EmptyMessage("nothing to decrypt")
    out = bytearray()
    for k, (r, q) in enumerate(zip(ct.remainders, key.quotients), start=1):
        out.append(recover_symbol(mod_join(q, r, params.modulus), k, params.beta))
    return bytes(out)
