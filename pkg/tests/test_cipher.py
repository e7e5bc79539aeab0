import pytest
from hypothesis import given
from hypothesis import strategies as st

import worked_example as paper
from kaj.cipher import (
    DEFAULT_PARAMS,
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
from kaj.errors import (
    ByteRangeError,
    DivisibilityError,
    EmptyMessage,
    IntegrityError,
    InvalidParams,
    LengthMismatch,
    RemainderOutOfRange,
)
from kaj.transform import ImageAtom, expand_carrier_series, transform_expr

byte_strings = st.binary(min_size=1, max_size=64)
params = st.builds(CipherParams, st.sampled_from([1, 2, 3, 5, 10]), st.sampled_from([2, 257, 500, 1009]))


def symbolic_coefficients(data, beta):
    """Read M_k off the transformed carrier series: the weight on 1/c^(m+k+2)."""
    image = transform_expr(expand_carrier_series(data, beta))
    coeffs = [image.coefficient(ImageAtom.inv_pow(k + 2)) for k in range(1, len(data) + 1)]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


class TestParams:
    @pytest.mark.parametrize("beta, modulus", [(0, 500), (-2, 500), (2, 1), (2, 0), (2.0, 500), (True, 500)])
    def test_invalid(self, beta, modulus):
        with pytest.raises(InvalidParams):
            CipherParams(beta=beta, modulus=modulus)

    def test_defaults_are_the_worked_example(self):
        assert CipherParams() == DEFAULT_PARAMS == CipherParams(2, 500)


class TestImageCoefficients:
    def test_worked_example(self):
        assert image_coefficients(paper.BYTES, DEFAULT_PARAMS) == paper.M

    def test_zero_bytes(self):
        for beta in (1, 4):
            assert image_coefficients([0, 0], CipherParams(beta, 500)) == [0, 0]

    def test_small(self):
        assert image_coefficients([65, 66], CipherParams(3, 500)) == [130, 1188]
        assert symbolic_coefficients([65, 66], 3) == [130, 1188]

    def test_empty(self):
        with pytest.raises(EmptyMessage):
            image_coefficients(b"", DEFAULT_PARAMS)

    def test_byte_range_checked(self):
        with pytest.raises(ValueError):
            image_coefficients([256], DEFAULT_PARAMS)

    @given(st.binary(min_size=1, max_size=12), st.integers(min_value=1, max_value=5))
    def test_matches_symbolic_pipeline(self, data, beta):
        assert image_coefficients(data, CipherParams(beta, 500)) == symbolic_coefficients(data, beta)


class TestModSplit:
    @pytest.mark.parametrize(
        "m, n, expected",
        [(936, 500, (1, 436)), (11354112, 500, (22708, 112)), (0, 7, (0, 0)), (138, 500, (0, 138))],
    )
    def test_split(self, m, n, expected):
        assert mod_split(m, n) == expected

    @pytest.mark.parametrize("q, r, n, expected", [(22708, 112, 500, 11354112), (0, 0, 9, 0), (3179, 260, 500, 1589760)])
    def test_join(self, q, r, n, expected):
        assert mod_join(q, r, n) == expected

    @pytest.mark.parametrize("r", [-1, 500, 501])
    def test_join_range(self, r):
        with pytest.raises(RemainderOutOfRange):
            mod_join(1, r, 500)

    def test_worked_example_split(self):
        assert [mod_split(m, 500) for m in paper.M] == list(zip(paper.Q, paper.R))

    @given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=10**6))
    def test_inverse(self, m, n):
        q, r = mod_split(m, n)
        assert 0 <= r < n
        assert mod_join(q, r, n) == m


class TestRecoverSymbol:
    def test_first(self):
        assert recover_symbol(138, 1, 2) == 69

    def test_zero(self):
        for k in (1, 5, 40):
            assert recover_symbol(0, k, 3) == 0

    def test_odd_first_coefficient(self):
        with pytest.raises(DivisibilityError):
            recover_symbol(131, 1, 2)

    def test_too_big(self):
        with pytest.raises(ByteRangeError):
            recover_symbol(2 * 256, 1, 2)

    def test_worked_example(self):
        assert [recover_symbol(m, k, 2) for k, m in enumerate(paper.M, start=1)] == paper.BYTES


class TestEncryptDecrypt:
    def test_worked_example_encrypt(self):
        ct, key = encrypt(paper.TEXT.encode("ascii"), DEFAULT_PARAMS)
        assert list(ct.remainders) == paper.R
        assert list(key.quotients) == paper.Q
        assert ct.params == DEFAULT_PARAMS

    def test_worked_example_decrypt(self):
        ct = Ciphertext(tuple(paper.R), DEFAULT_PARAMS)
        assert decrypt(ct, KeyStream(tuple(paper.Q))) == paper.TEXT.encode("ascii")

    def test_single_byte(self):
        ct, key = encrypt([65], DEFAULT_PARAMS)
        assert ct.remainders == (130,) and key.quotients == (0,)
        assert decrypt(ct, key) == b"A"

    def test_wrong_quotient_caught(self):
        # M = 630 = 2 * 315 and 315 is not a byte
        with pytest.raises(ByteRangeError):
            decrypt(Ciphertext((130,), DEFAULT_PARAMS), KeyStream((1,)))

    def test_tampered_remainder_caught(self):
        rs = list(paper.R)
        rs[0] = 139
        with pytest.raises(DivisibilityError):
            decrypt(Ciphertext(tuple(rs)), KeyStream(tuple(paper.Q)))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            decrypt(Ciphertext(tuple(paper.R)), KeyStream(tuple(paper.Q[:-1])))

    def test_integrity_errors_share_a_base(self):
        assert issubclass(LengthMismatch, IntegrityError)
        assert issubclass(DivisibilityError, IntegrityError)

    def test_empty(self):
        with pytest.raises(EmptyMessage):
            encrypt(b"", DEFAULT_PARAMS)

    def test_deterministic(self):
        assert encrypt(b"hello", DEFAULT_PARAMS) == encrypt(b"hello", DEFAULT_PARAMS)

    def test_ciphertext_validates_range(self):
        with pytest.raises(RemainderOutOfRange):
            Ciphertext((500,), DEFAULT_PARAMS)

    def test_key_validates_sign(self):
        with pytest.raises(InvalidParams):
            KeyStream((-1,))

    def test_output_is_plain_integers(self):
        # the order m never reaches the ciphertext or key
        ct, key = encrypt(b"any order", DEFAULT_PARAMS)
        assert all(type(v) is int for v in ct.remainders + key.quotients)

    @given(byte_strings, params)
    def test_round_trip(self, data, p):
        ct, key = encrypt(data, p)
        assert all(0 <= r < p.modulus for r in ct.remainders)
        assert decrypt(ct, key, p) == data


def test_coefficients_exceed_machine_words():
    data = bytes([255] * 64)
    m = image_coefficients(data, CipherParams(2, 500))
    assert m[-1] == 255 * 2**63 * 64 * 65
    assert m[-1] > 10**23 > 2**64
    ct, key = encrypt(data, CipherParams(2, 500))
    assert key.quotients[-1] > 2**64
    assert decrypt(ct, key) == data


@given(st.binary(min_size=1, max_size=30), st.integers(min_value=1, max_value=10))
def test_growth_bound(data, beta):
    n = len(data)
    m = image_coefficients(data, CipherParams(beta, 500))
    assert m[-1] <= 255 * beta ** (n - 1) * n * (n + 1)
