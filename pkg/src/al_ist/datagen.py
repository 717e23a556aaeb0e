"""Seeded datum generator for reproducible test corpora.

Uses PCG-XSH-RR-32: the 64-bit state advances through the linear
congruential step

    state <- state * 6364136223846793005 + increment  (mod 2^64),

with the increment forced odd, and each output is the top bits xor-shifted
((state >> 18) ^ state) >> 27 rotated right by state >> 59.  The constants
are fixed here so corpora regenerate identically across implementations.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ValidationError
from .sequence import Sequence

_MULT = 6364136223846793005
_MASK64 = (1 << 64) - 1


class PCG32:
    """32-bit output PCG generator with a fixed stream."""

    def __init__(self, seed: int, stream: int = 0):
        self._inc = ((stream << 1) | 1) & _MASK64
        self._state = 0
        self._step()
        self._state = (self._state + (seed & _MASK64)) & _MASK64
        self._step()

    def _step(self):
        self._state = (self._state * _MULT + self._inc) & _MASK64

    def next_u32(self) -> int:
        old = self._state
        self._step()
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 32 bits of randomness."""
        return self.next_u32() / 4294967296.0

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (modulo reduction; desk-scale use)."""
        if hi < lo:
            raise ValidationError("empty integer range")
        return lo + self.next_u32() % (hi - lo + 1)


def _draw_value(rng: PCG32, min_modulus: float, max_modulus: float) -> complex:
    modulus = min_modulus + (max_modulus - min_modulus) * rng.uniform()
    phase = 2.0 * math.pi * rng.uniform()
    return modulus * complex(math.cos(phase), math.sin(phase))


def random_sequence(
    seed: int,
    count: int,
    lo: int,
    hi: int,
    max_modulus: float,
    min_modulus: float = 0.05,
) -> Sequence:
    """count distinct random sites in [lo, hi] with moduli in
    [min_modulus, max_modulus) and uniform phases."""
    if count > hi - lo + 1:
        raise ValidationError("more sites requested than the range holds")
    if not (0.0 <= min_modulus <= max_modulus < 1.0):
        raise ValidationError("moduli must satisfy 0 <= min <= max < 1")
    rng = PCG32(seed)
    sites: list[int] = []
    taken = set()
    while len(sites) < count:
        n = rng.integer(lo, hi)
        if n not in taken:
            taken.add(n)
            sites.append(n)
    values = np.zeros(hi - lo + 1, dtype=np.complex128)
    for n in sorted(sites):
        values[n - lo] = _draw_value(rng, min_modulus, max_modulus)
    return Sequence(lo, values).trimmed()


def dense_random_sequence(
    seed: int,
    offset: int,
    length: int,
    max_modulus: float,
    min_modulus: float = 0.05,
) -> Sequence:
    """length consecutive nonzero random entries starting at offset."""
    if not (0.0 < min_modulus <= max_modulus < 1.0):
        raise ValidationError("moduli must satisfy 0 < min <= max < 1")
    rng = PCG32(seed)
    values = np.array(
        [_draw_value(rng, min_modulus, max_modulus) for _ in range(length)],
        dtype=np.complex128,
    )
    return Sequence(offset, values)
