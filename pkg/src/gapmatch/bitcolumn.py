"""Multi-word bit-vectors.

A column of ``nbits`` bits is stored in ``ceil(nbits / 64)`` machine words,
least-significant word first; bit ``b`` lives at position ``b % 64`` of word
``b // 64``. Python code manipulates the whole vector as one ``int``; the
word arrays exist for the compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1


def nwords_for(nbits: int) -> int:
    return max(1, -(-nbits // WORD_BITS))


def to_words(value: int, nwords: int) -> np.ndarray:
    return np.array(
        [(value >> (WORD_BITS * j)) & WORD_MASK for j in range(nwords)], dtype=np.uint64
    )


def from_words(words) -> int:
    value = 0
    for j, w in enumerate(words):
        value |= int(w) << (WORD_BITS * j)
    return value


def iter_bits(value: int) -> Iterator[int]:
    """Set bits in ascending order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


@dataclass(frozen=True)
class BitColumn:
    value: int
    nbits: int

    def __post_init__(self) -> None:
        if self.value >> self.nbits:
            raise ValueError("bits beyond nbits must be zero")

    @classmethod
    def from_bits(cls, bits, nbits: int) -> BitColumn:
        value = 0
        for b in bits:
            value |= 1 << b
        return cls(value, nbits)

    @property
    def nwords(self) -> int:
        return nwords_for(self.nbits)

    def words(self) -> np.ndarray:
        return to_words(self.value, self.nwords)

    def bits(self) -> list[int]:
        return list(iter_bits(self.value))

    def __contains__(self, bit: int) -> bool:
        return bool(self.value >> bit & 1)

    def __and__(self, other: BitColumn) -> BitColumn:
        return BitColumn(self.value & other.value, self.nbits)

    def __or__(self, other: BitColumn) -> BitColumn:
        return BitColumn(self.value | other.value, self.nbits)

    def __bool__(self) -> bool:
        return self.value != 0

    def popcount(self) -> int:
        return bin(self.value).count("1")
