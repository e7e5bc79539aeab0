"""Exact-arithmetic KAJ transform table and the cipher built on it."""

from kaj.cipher import (
    CipherParams,
    Ciphertext,
    KeyStream,
    decrypt,
    encrypt,
    image_coefficients,
    mod_join,
    mod_split,
    recover_symbol,
)
from kaj.codec import (
    decode_plaintext,
    encode_plaintext,
    parse_ciphertext,
    parse_key,
    render_legacy_glyphs,
    serialize_ciphertext,
    serialize_key,
)
from kaj.cryptanalysis import CandidateReport, crack, residue_candidates
from kaj.errors import (
    ByteRangeError,
    DivisibilityError,
    EmptyMessage,
    FormatError,
    IntegrityError,
    InvalidEncoding,
    InvalidParams,
    KajError,
    LengthMismatch,
    MalformedImage,
    RemainderOutOfRange,
)
from kaj.transform import (
    ImageAtom,
    ImageExpr,
    TimeAtom,
    TimeExpr,
    expand_carrier_series,
    invert_atom,
    invert_expr,
    transform_atom,
    transform_expr,
)

__version__ = "0.1.0"
