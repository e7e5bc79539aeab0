r"""
What the ciphertext leaks
=========================

``beta`` and the modulus travel with the ciphertext.  Each remainder then
pins the plaintext byte to the solutions of ``F * w_k = r_k (mod N)``, and
an observer can enumerate them without the key.
"""

import random

from kaj import CipherParams, crack, encode_plaintext, encrypt

ct, _ = encrypt(encode_plaintext("ENVIRONMENT"), CipherParams(beta=2, modulus=500))
report = crack(ct, printable=True)

for k, (found, w) in enumerate(zip(report.sets, report.multipliers), start=1):
    shown = "".join(sorted(chr(b) for b in found))
    print(f"k={k:2d}  w mod 500={w:3d}  printable candidates={shown!r}")

print(f"remaining uncertainty: {report.keyspace_bits():.1f} bits for {len(ct)} bytes")

###############################################################################
# With a prime modulus above 255 every position whose weight is nonzero mod
# N has exactly one candidate, so the key adds nothing.

rng = random.Random(0)
secret = bytes(rng.randrange(256) for _ in range(40))
ct, _ = encrypt(secret, CipherParams(beta=2, modulus=1009))
report = crack(ct)
print("prime modulus, fully recovered:", report.recovered == secret)
