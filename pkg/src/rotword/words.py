"""Bit-packed binary words.

A word stores its symbols little-endian in a single Python int (symbol i at
bit i) plus an explicit length, so equality, hashing and set membership cost
one int comparison each.  Words up to WORD_CAP symbols round-trip through the
two-lane uint64 packing used by the array kernels.
"""

from __future__ import annotations

from typing import Iterable, Iterator

WORD_CAP = 128

_MASK64 = (1 << 64) - 1


class BinaryWord:
    """Immutable sequence over {0,1} with cheap value equality."""

    __slots__ = ("_bits", "_n")

    def __init__(self, symbols: str | Iterable[int] = ()) -> None:
        bits = 0
        n = 0
        if isinstance(symbols, str):
            for ch in symbols:
                if ch == "1":
                    bits |= 1 << n
                elif ch != "0":
                    raise ValueError(f"invalid symbol {ch!r}; expected '0' or '1'")
                n += 1
        else:
            for s in symbols:
                if s == 1:
                    bits |= 1 << n
                elif s != 0:
                    raise ValueError(f"invalid symbol {s!r}; expected 0 or 1")
                n += 1
        self._bits = bits
        self._n = n

    @classmethod
    def from_bits(cls, bits: int, length: int) -> "BinaryWord":
        if length < 0 or bits < 0 or bits >> length:
            raise ValueError("bits do not fit the stated length")
        w = cls.__new__(cls)
        w._bits = bits
        w._n = length
        return w

    @classmethod
    def from_packed(cls, lo: int, hi: int, length: int) -> "BinaryWord":
        return cls.from_bits((hi << 64) | lo, length)

    @classmethod
    def constant(cls, symbol: int, length: int) -> "BinaryWord":
        if symbol not in (0, 1):
            raise ValueError("symbol must be 0 or 1")
        bits = (1 << length) - 1 if symbol else 0
        return cls.from_bits(bits, length)

    @property
    def bits(self) -> int:
        return self._bits

    def to_packed(self) -> tuple[int, int]:
        """(lo, hi) uint64 lanes; requires length <= WORD_CAP."""
        if self._n > WORD_CAP:
            raise ValueError(f"word longer than {WORD_CAP} symbols cannot be packed")
        return self._bits & _MASK64, self._bits >> 64

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, index: int | slice) -> "int | BinaryWord":
        if isinstance(index, slice):
            start, stop, step = index.indices(self._n)
            if step != 1:
                raise ValueError("only contiguous slices are supported")
            length = max(0, stop - start)
            return BinaryWord.from_bits((self._bits >> start) & ((1 << length) - 1), length)
        if index < 0:
            index += self._n
        if not 0 <= index < self._n:
            raise IndexError("word index out of range")
        return (self._bits >> index) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self._n):
            yield bits & 1
            bits >>= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryWord)
            and self._n == other._n
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __lt__(self, other: "BinaryWord") -> bool:
        return str(self) < str(other)

    def __le__(self, other: "BinaryWord") -> bool:
        return str(self) <= str(other)

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord.from_bits(
            self._bits | (other._bits << self._n), self._n + other._n
        )

    def __mul__(self, times: int) -> "BinaryWord":
        if times < 0:
            raise ValueError("repetition count must be >= 0")
        bits = 0
        for _ in range(times):
            bits = (bits << self._n) | self._bits
        return BinaryWord.from_bits(bits, self._n * times)

    def reverse(self) -> "BinaryWord":
        bits = 0
        src = self._bits
        for _ in range(self._n):
            bits = (bits << 1) | (src & 1)
            src >>= 1
        return BinaryWord.from_bits(bits, self._n)

    def complement(self) -> "BinaryWord":
        return BinaryWord.from_bits(~self._bits & ((1 << self._n) - 1), self._n)

    def count(self, symbol: int = 1) -> int:
        ones = self._bits.bit_count()
        return ones if symbol == 1 else self._n - ones

    def contains_factor(self, factor: "BinaryWord") -> bool:
        """True when factor occurs as a contiguous block of this word."""
        if factor._n > self._n:
            return False
        mask = (1 << factor._n) - 1
        bits = self._bits
        for _ in range(self._n - factor._n + 1):
            if bits & mask == factor._bits:
                return True
            bits >>= 1
        return False

    def __str__(self) -> str:
        bits = self._bits
        chars = []
        for _ in range(self._n):
            chars.append("1" if bits & 1 else "0")
            bits >>= 1
        return "".join(chars)

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"
