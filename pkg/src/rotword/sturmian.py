"""Sturmian languages per Farey interval and standard/central word machinery.

A Farey interval of order >= n indexes the set St(n) of all length-n Sturmian
words whose slope lies in that interval; the set has exactly n+1 elements and
is enumerated here from the full intercept grid of the interval mediant.
Standard words grow from a directive sequence (d_1, d_2, ...) of positive
integers via s_k = s_{k-1}^{d_k} s_{k-2}, with s_{-1} = 1 and s_0 = 0; central
and bispecial words derive from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .kernels import get_backend, unpack_words
from .rationals import FareyInterval, Fraction, SlopeRange, farey_intervals
from .words import WORD_CAP, BinaryWord

__all__ = [
    "SturmianLanguage",
    "StandardWordSequence",
    "mechanical_word",
    "sturmian_language",
    "new_words",
    "left_special_words",
    "left_special_word",
    "right_special_word",
    "standard_words",
    "central_word",
    "swap_last_two",
    "bispecial_words",
    "slope_of_directive",
]

_MASK64 = (1 << 64) - 1


def _in_arc(x: Fraction, start: Fraction, end: Fraction) -> bool:
    # Half-open circle arc [start, end); start >= end wraps around, so equal
    # endpoints mean the full circle.
    if start < end:
        return start <= x < end
    return x >= start or x < end


def mechanical_word(slope: Fraction, intercept: Fraction, length: int) -> BinaryWord:
    """Sturmian word: symbol i is 1 iff {i*slope} lies in [intercept, intercept+slope).

    Exact rational arithmetic throughout; serves as the scalar reference for
    the grid kernels.
    """
    if not 0 < slope < 1:
        raise ValueError(f"slope must satisfy 0 < slope < 1, got {slope}")
    if not 0 <= intercept < 1:
        raise ValueError(f"intercept must lie in [0, 1), got {intercept}")
    if length < 1:
        raise ValueError("length must be >= 1")
    end = intercept + slope
    if end >= 1:
        end -= 1
    return BinaryWord(
        1 if _in_arc((i * slope) % 1, intercept, end) else 0 for i in range(length)
    )


@dataclass(frozen=True)
class SturmianLanguage:
    """All Sturmian words of one length whose slope lies in one Farey interval."""

    length: int
    interval: FareyInterval
    words: frozenset[BinaryWord]


@lru_cache(maxsize=8192)
def _language_keys(length: int, interval: FareyInterval) -> tuple[int, ...]:
    """Sorted bit-packed words of St(length, interval)."""
    med = interval.mediant
    packed = get_backend().sturmian_grid_words(med.numerator, med.denominator, length)
    keys = sorted({int(lo) | (int(hi) << 64) for lo, hi in packed.tolist()})
    if len(keys) != length + 1:
        raise AssertionError(
            f"language of {interval} at length {length} has {len(keys)} words, "
            f"expected {length + 1}"
        )
    return tuple(keys)


def sturmian_language(length: int, interval: FareyInterval) -> SturmianLanguage:
    if length < 1:
        raise ValueError("length must be >= 1")
    if length > WORD_CAP:
        raise ValueError(f"length exceeds the {WORD_CAP}-symbol word cap")
    if interval.order < length:
        raise ValueError(
            f"interval order {interval.order} is below the word length {length}"
        )
    words = frozenset(
        BinaryWord.from_bits(k, length) for k in _language_keys(length, interval)
    )
    return SturmianLanguage(length, interval, words)


def new_words(length: int, interval: FareyInterval) -> frozenset[BinaryWord]:
    """Words of St(length, interval) absent from every earlier interval's language."""
    ordered = farey_intervals(length, "full")
    try:
        position = ordered.index(interval)
    except ValueError:
        raise ValueError(
            f"{interval} is not a Farey interval of order {length}"
        ) from None
    target = set(_language_keys(length, interval))
    for earlier in ordered[:position]:
        target.difference_update(_language_keys(length, earlier))
    return frozenset(BinaryWord.from_bits(k, length) for k in target)


def _special_key(keys: set[int]) -> int:
    """The unique w with both 0w and 1w in a language given by packed keys."""
    found = set()
    for k in keys:
        w = k >> 1  # drop the first symbol
        if (w << 1) in keys and ((w << 1) | 1) in keys:
            found.add(w)
    if len(found) != 1:
        raise AssertionError(
            f"expected exactly one left special word, found {len(found)}"
        )
    return found.pop()


def left_special_word(language: SturmianLanguage) -> BinaryWord:
    """The word one symbol shorter that extends to the left by both letters."""
    keys = {w.bits for w in language.words}
    return BinaryWord.from_bits(_special_key(keys), language.length - 1)


def right_special_word(language: SturmianLanguage) -> BinaryWord:
    """The word one symbol shorter that extends to the right by both letters."""
    n = language.length
    keys = {w.bits for w in language.words}
    found = set()
    low_mask = (1 << (n - 1)) - 1
    for k in keys:
        w = k & low_mask
        if w in found:
            continue
        if w in keys and (w | (1 << (n - 1))) in keys:
            found.add(w)
    if len(found) != 1:
        raise AssertionError(
            f"expected exactly one right special word, found {len(found)}"
        )
    return BinaryWord.from_bits(found.pop(), n - 1)


def left_special_words(length: int, slope_range: SlopeRange = "full") -> set[BinaryWord]:
    """Union over Farey intervals of each language's unique left special word.

    For the full slope range the result has totient_sum(length + 1) elements.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    result = set()
    for interval in farey_intervals(length + 1, slope_range):
        keys = set(_language_keys(length + 1, interval))
        result.add(BinaryWord.from_bits(_special_key(keys), length))
    return result


def _check_directive(entries: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(entries)
    if any(d < 1 for d in entries):
        raise ValueError(f"directive entries must be positive, got {entries}")
    return entries


@dataclass(frozen=True)
class StandardWordSequence:
    """Words s_{-1}, s_0, .., s_m of the standard-word recurrence."""

    entries: tuple[int, ...]
    words: tuple[BinaryWord, ...]
    lengths: tuple[int, ...]

    def word(self, k: int) -> BinaryWord:
        """s_k for k in -1..len(entries)."""
        return self.words[k + 1]

    def length(self, k: int) -> int:
        return self.lengths[k + 1]

    @property
    def final(self) -> BinaryWord:
        return self.words[-1]


def standard_words(entries: Sequence[int], cap: int = WORD_CAP) -> StandardWordSequence:
    """Run s_k = s_{k-1}^{d_k} s_{k-2} for the whole directive sequence.

    Raises if any produced word would exceed cap symbols.
    """
    entries = _check_directive(entries)
    words = [BinaryWord("1"), BinaryWord("0")]
    for d in entries:
        nxt_len = d * len(words[-1]) + len(words[-2])
        if nxt_len > cap:
            raise ValueError(
                f"standard word would reach {nxt_len} symbols, over the cap {cap}"
            )
        words.append(words[-1] * d + words[-2])
    return StandardWordSequence(
        entries, tuple(words), tuple(len(w) for w in words)
    )


def central_word(s: BinaryWord) -> BinaryWord:
    """Drop the final two symbols; defined for words ending in 01 or 10."""
    if len(s) < 2 or s[-1] == s[-2]:
        raise ValueError("central words come from words ending in 01 or 10")
    return s[: len(s) - 2]


def swap_last_two(s: BinaryWord) -> BinaryWord:
    """Same word with its final two (distinct) symbols exchanged."""
    return central_word(s) + BinaryWord((s[-1], s[-2]))


def bispecial_words(entries: Sequence[int], max_length: int) -> list[BinaryWord]:
    """All bispecial words of the directive sequence's language, up to max_length.

    These are the words s_{k-1}^t s_{k-2} (0 < t <= d_k) with the last two
    symbols removed; duplicates collapse and the result is sorted by length
    then lexicographically.
    """
    entries = _check_directive(entries)
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    prev2, prev = BinaryWord("1"), BinaryWord("0")
    found = set()
    for d in entries:
        if len(prev) + len(prev2) - 2 > max_length:
            break
        for t in range(1, d + 1):
            if t * len(prev) + len(prev2) - 2 > max_length:
                break
            found.add(central_word(prev * t + prev2))
        prev2, prev = prev, prev * d + prev2
    return sorted(found, key=lambda w: (len(w), str(w)))


def slope_of_directive(entries: Sequence[int]) -> Fraction:
    """Slope of the directive sequence: the continued fraction [0; 1+d_1, d_2, ..]."""
    entries = _check_directive(entries)
    if not entries:
        raise ValueError("directive sequence must be non-empty")
    value = Fraction(0)
    coefficients = [1 + entries[0], *entries[1:]]
    for a in reversed(coefficients):
        value = Fraction(1, a + value)
    return value


def _keys_to_packed(keys: Sequence[int]) -> np.ndarray:
    out = np.empty((len(keys), 2), dtype=np.uint64)
    for row, k in enumerate(keys):
        out[row, 0] = k & _MASK64
        out[row, 1] = k >> 64
    return out


def language_symbol_matrix(length: int, interval: FareyInterval) -> tuple[tuple[int, ...], np.ndarray]:
    """(sorted packed keys, uint8 symbol matrix) for one language; kernel food."""
    keys = _language_keys(length, interval)
    return keys, unpack_words(_keys_to_packed(keys), length)
