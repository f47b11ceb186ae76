"""Karp-Rabin fingerprints of length-k fragments.

Fingerprints are polynomial residues ``sum(code[j] * base**(k-1-j)) mod p``
so that the fingerprint of a neighbouring fragment (one position to the left
or right) is obtained in O(1) from the current one.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Sequence, Union

MERSENNE_61 = (1 << 61) - 1

# A fragment's order value: an int residue in KRF mode, the k-mer bytes in LEX mode.
OrderValue = Union[int, bytes]


class OrderMode(str, enum.Enum):
    KRF = "krf"
    LEX = "lex"


@dataclass(frozen=True)
class HashConfig:
    k: int
    base: int
    modulus: int = MERSENNE_61
    seed: int | None = None
    base_inverse: int = field(init=False)
    base_pow: int = field(init=False)  # base ** (k - 1) mod modulus

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"fragment length must be >= 1, got {self.k}")
        if not 2 <= self.base <= self.modulus - 2:
            raise ValueError(f"base {self.base} outside [2, modulus-2]")
        object.__setattr__(self, "base_inverse", pow(self.base, -1, self.modulus))
        object.__setattr__(self, "base_pow", pow(self.base, self.k - 1, self.modulus))

    @classmethod
    def from_seed(cls, k: int, seed: int = 0, modulus: int = MERSENNE_61) -> "HashConfig":
        """Draw the base uniformly from [2, modulus-2] with a PRNG seeded by `seed`."""
        if not 0 <= seed < 1 << 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        base = random.Random(seed).randint(2, modulus - 2)
        return cls(k=k, base=base, modulus=modulus, seed=seed)


def krf_direct(letters: Sequence[int], cfg: HashConfig) -> int:
    if len(letters) != cfg.k:
        raise ValueError(f"expected {cfg.k} letters, got {len(letters)}")
    h = 0
    base, mod = cfg.base, cfg.modulus
    for c in letters:
        h = (h * base + c) % mod
    return h


def roll_right(front_krf: int, outgoing: int, incoming: int, cfg: HashConfig) -> int:
    """Fingerprint of the fragment at p+1 given the one at p.

    `outgoing` is the letter at p, `incoming` the letter at p+k.
    """
    return ((front_krf - outgoing * cfg.base_pow) * cfg.base + incoming) % cfg.modulus


def roll_left(krf_at_p: int, incoming: int, outgoing: int, cfg: HashConfig) -> int:
    """Fingerprint of the fragment at p-1 given the one at p.

    `incoming` is the letter at p-1, `outgoing` the letter at p+k-1.
    """
    return (incoming * cfg.base_pow + (krf_at_p - outgoing) * cfg.base_inverse) % cfg.modulus
