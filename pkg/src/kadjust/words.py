"""Binary words and the empirical tallies derived from them.

A BitWord is an immutable sequence of 0/1 symbols.  Everything downstream
(entropy baselines, coders, tests) consumes either a BitWord or one of the
count summaries defined here: per-symbol counts, aligned-pair counts for a
pair of words, and disjoint 2-bit block counts of a single word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


class BitWord:
    """Immutable finite binary word of length >= 1."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int] | np.ndarray):
        arr = np.array(bits, dtype=np.uint8, copy=True)
        if arr.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        if arr.size == 0:
            raise ValueError("a word must contain at least one bit")
        if arr.max(initial=0) > 1:
            raise ValueError("bits must be 0 or 1")
        arr.setflags(write=False)
        self._bits = arr

    @classmethod
    def from01(cls, text: str) -> "BitWord":
        """Build a word from a string of '0'/'1' characters."""
        if not text or any(c not in "01" for c in text):
            raise ValueError("expected a nonempty string over {0,1}")
        return cls(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_uint(cls, value: int, n: int) -> "BitWord":
        """Word of length n whose bits are the big-endian binary digits of value."""
        if n < 1 or value < 0 or value >= (1 << n):
            raise ValueError("value out of range for word length")
        return cls([(value >> (n - 1 - i)) & 1 for i in range(n)])

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def n(self) -> int:
        return self._bits.size

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self._bits))

    def prefix(self, m: int) -> "BitWord":
        if not 1 <= m <= self.n:
            raise ValueError("prefix length out of range")
        return BitWord(self._bits[:m])

    def to01(self) -> str:
        return self._bits.tobytes().translate(bytes.maketrans(b"\x00\x01", b"01")).decode("ascii")

    def tolist(self) -> list[int]:
        return self._bits.tolist()

    def __len__(self) -> int:
        return self._bits.size

    def __getitem__(self, i: int) -> int:
        return int(self._bits[i])

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitWord):
            return NotImplemented
        return self._bits.size == other._bits.size and bool(np.all(self._bits == other._bits))

    def __hash__(self) -> int:
        return hash((self._bits.size, self._bits.tobytes()))

    def __repr__(self) -> str:
        s = self.to01()
        if len(s) > 64:
            s = s[:61] + "..."
        return f"BitWord({s!r}, n={self.n})"


def weight(word: BitWord) -> int:
    """Number of ones in the word."""
    return word.weight


@dataclass(frozen=True)
class SymbolCounts:
    """Zero/one tallies of a single word."""

    n0: int
    n1: int

    def __post_init__(self):
        if self.n0 < 0 or self.n1 < 0 or self.n0 + self.n1 < 1:
            raise ValueError("counts must be nonnegative with positive total")

    @classmethod
    def from_word(cls, word: BitWord) -> "SymbolCounts":
        w = word.weight
        return cls(n0=word.n - w, n1=w)

    @property
    def n(self) -> int:
        return self.n0 + self.n1

    @property
    def p(self) -> float:
        """Empirical fraction of ones."""
        return self.n1 / (self.n0 + self.n1)


@dataclass(frozen=True)
class PairCounts:
    """Aligned-pair tallies for equal-length words x, y.

    c_ab counts positions i with x_i = a and y_i = b.
    """

    c00: int
    c01: int
    c10: int
    c11: int

    def __post_init__(self):
        if min(self.c00, self.c01, self.c10, self.c11) < 0:
            raise ValueError("counts must be nonnegative")
        if self.n < 1:
            raise ValueError("total count must be positive")

    @classmethod
    def from_words(cls, x: BitWord, y: BitWord) -> "PairCounts":
        if x.n != y.n:
            raise ValueError(f"length mismatch: {x.n} vs {y.n}")
        cells = np.bincount(2 * x.bits.astype(np.intp) + y.bits, minlength=4)
        return cls(*(int(c) for c in cells))

    @property
    def n(self) -> int:
        return self.c00 + self.c01 + self.c10 + self.c11

    @property
    def x_counts(self) -> SymbolCounts:
        return SymbolCounts(n0=self.c00 + self.c01, n1=self.c10 + self.c11)

    @property
    def y_counts(self) -> SymbolCounts:
        return SymbolCounts(n0=self.c00 + self.c10, n1=self.c01 + self.c11)


@dataclass(frozen=True)
class BlockCounts:
    """Disjoint 2-bit block tallies of one word, left-aligned.

    An odd trailing bit is excluded from the block tallies and flagged in
    `tail`.
    """

    b00: int
    b01: int
    b10: int
    b11: int
    tail: int

    def __post_init__(self):
        if min(self.b00, self.b01, self.b10, self.b11) < 0:
            raise ValueError("counts must be nonnegative")
        if self.tail not in (0, 1):
            raise ValueError("tail must be 0 or 1")

    @property
    def num_blocks(self) -> int:
        return self.b00 + self.b01 + self.b10 + self.b11

    @property
    def n(self) -> int:
        """Length of the tallied word."""
        return 2 * self.num_blocks + self.tail

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b00, self.b01, self.b10, self.b11)


def block_counts(word: BitWord) -> BlockCounts:
    """Tally disjoint 2-bit blocks of the word, left to right."""
    nb = word.n // 2
    tail = word.n - 2 * nb
    if nb == 0:
        return BlockCounts(0, 0, 0, 0, tail)
    pairs = 2 * word.bits[: 2 * nb : 2].astype(np.intp) + word.bits[1 : 2 * nb : 2]
    cells = np.bincount(pairs, minlength=4)
    return BlockCounts(*(int(c) for c in cells), tail=tail)
