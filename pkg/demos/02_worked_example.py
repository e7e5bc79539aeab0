r"""
Encrypting ENVIRONMENT
======================

The message rides on the series of ``F t^2 e^{2t}``: byte ``k`` weights the
term in ``t^(k+1)``.  After the transform, the weight on ``1/c^(m+k+2)`` is
an integer ``M_k``; its remainder mod 500 is sent and the quotient is kept as
the key.
"""

from kaj import CipherParams, decrypt, encode_plaintext, encrypt, image_coefficients
from kaj.codec import decode_plaintext, serialize_ciphertext, serialize_key
from kaj.notation import render_image, render_time
from kaj.transform import expand_carrier_series, transform_expr

params = CipherParams(beta=2, modulus=500)
message = encode_plaintext("ENVIRONMENT")
print("bytes      ", list(message))

###############################################################################
# Carrier polynomial and its image.

h = expand_carrier_series(message, params.beta)
print("h(t)       ", render_time(h))
print("S_m h      ", render_image(transform_expr(h)))

###############################################################################
# The same numbers in closed form, ``M_k = F_k 2^(k-1) k (k+1)``.

print("M          ", image_coefficients(message, params))

ct, key = encrypt(message, params)
print("remainders ", list(ct.remainders))
print("quotients  ", list(key.quotients))

###############################################################################
# On disk the two halves are small text files.

print()
print(serialize_ciphertext(ct).decode(), end="")
print(serialize_key(key).decode(), end="")

###############################################################################
# Decryption rebuilds ``M_k = 500 q_k + r_k`` and divides out the position
# factor.  A wrong key shows up as a non-divisible or out-of-range value.

print()
print("decrypted  ", decode_plaintext(decrypt(ct, key)))

###############################################################################
# Nothing is bounded by a machine word: 256 bytes with ``beta = 3`` push the
# last coefficient past 10^126.

long_message = bytes(range(256))
big_ct, big_key = encrypt(long_message, CipherParams(beta=3, modulus=500))
assert decrypt(big_ct, big_key) == long_message
print("digits in the last key quotient:", len(str(big_key.quotients[-1])))
