"""Seedable xorshift64* generator.

State update (Vigna 2016): ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` on a
64-bit word, output ``x * 0x2545F4914F6CDD1D mod 2**64``.  The seed is passed
through one SplitMix64 step (increment ``0x9E3779B97F4A7C15``, multipliers
``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB``) so that small seeds, zero
included, give well-mixed nonzero states.  Bounded draws use rejection
sampling on the high bits, so streams are reproducible in any language.
"""

from __future__ import annotations

from typing import MutableSequence

MASK64 = (1 << 64) - 1
MULTIPLIER = 0x2545F4914F6CDD1D


def splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int = 0):
        self.state = splitmix64(seed & MASK64) or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * MULTIPLIER) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        width = (bound - 1).bit_length()
        while True:
            r = self.next_u64() >> (64 - width) if width else 0
            if r < bound:
                return r

    def shuffle(self, items: MutableSequence) -> None:
        """Fisher-Yates, from the last position down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
