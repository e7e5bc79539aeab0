"""What a ciphertext leaks when the public parameters are known.

Without the quotient key an observer still knows ``r_k = F_k * w_k mod N``
with ``w_k = beta^(k-1) k (k+1)``.  Enumerating all 256 byte values per
position yields the set of plaintext bytes consistent with each remainder.
When ``gcd(w_k, N) = 1`` and ``N > 255`` that set has at most one element,
so the byte is recovered outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from kaj.cipher import CipherParams, Ciphertext

PRINTABLE = frozenset(range(32, 127))


@dataclass(frozen=True)
class CandidateReport:
    sets: tuple[frozenset[int], ...]
    multipliers: tuple[int, ...]

    def __len__(self):
        return len(self.sets)

    @property
    def recovered(self) -> bytes | None:
        """The plaintext if every position is pinned to a single byte."""
        if all(len(s) == 1 for s in self.sets):
            return bytes(next(iter(s)) for s in self.sets)
        return None

    def keyspace_bits(self) -> float:
        """log2 of the number of plaintexts consistent with the report."""
        if any(not s for s in self.sets):
            return float("-inf")
        return sum(math.log2(len(s)) for s in self.sets)


def position_weight(k: int, params: CipherParams) -> int:
    n = params.modulus
    return pow(params.beta, k - 1, n) * k * (k + 1) % n


def residue_candidates(r: int, k: int, params: CipherParams) -> frozenset[int]:
    """All bytes ``F`` with ``F * w_k = r (mod N)``, found by enumeration."""
    n = params.modulus
    if not 0 <= r < n:
        raise ValueError(f"remainder {r} outside [0, {n})")
    if k < 1:
        raise ValueError(f"positions are 1-based, got {k}")
    w = position_weight(k, params)
    return frozenset(f for f in range(256) if f * w % n == r)


def crack(ct: Ciphertext, printable: bool = False) -> CandidateReport:
    sets = []
    weights = []
    for k, r in enumerate(ct.remainders, start=1):
        found = residue_candidates(r, k, ct.params)
        if printable:
            found = found & PRINTABLE
        sets.append(found)
        weights.append(position_weight(k, ct.params))
    return CandidateReport(tuple(sets), tuple(weights))
