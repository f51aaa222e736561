"""Closed-form count of binary rotation words and its correction terms.

The count of length-m words (m >= 4, n = m - 1) assembles as: ordered
distinct same-slope Sturmian pairs, plus 2 for the constant words, minus the
single-minority-symbol overcount, plus the 2(n+1) such words themselves,
minus twice the equal-gap power-word overcount.  Every division by two in
these expressions is exact; integrality is asserted rather than rounded,
since a failure would mean a transcription bug, not data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rationals import totient, totient_sum

__all__ = [
    "CountReport",
    "SMALL_LENGTH_COUNTS",
    "power_word_tally",
    "margin_case_count",
    "power_word_count",
    "power_pair_excess",
    "single_one_pair_total",
    "same_slope_pair_count",
    "closed_form_count",
    "word_count",
    "growth_ratio",
]

# Counts for lengths below the closed form's domain, pinned to the geometric
# oracle (tests re-derive them every run).
SMALL_LENGTH_COUNTS = {1: 2, 2: 4, 3: 8}


def _check_gap_domain(n: int, gap: int) -> None:
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    if not 2 <= gap <= n - 1:
        raise ValueError(f"gap must lie in 2..n-1, got gap={gap} for n={n}")


def power_word_tally(n: int, gap: int) -> int:
    """Auxiliary tally g with power_word_count = floor(n/(gap+1)) * g / 2."""
    _check_gap_domain(n, gap)
    return n - gap + 1 + (n % (gap + 1))


def margin_case_count(n: int, gap: int) -> int:
    """How many fixed-gap power words keep both outer runs within the gap."""
    _check_gap_domain(n, gap)
    return min(gap + 1, n - gap)


def power_word_count(n: int, gap: int) -> int:
    """Number of length-(n+1) words 0^i (1 0^gap)^k 1 0^j for one base symbol."""
    product = (n // (gap + 1)) * power_word_tally(n, gap)
    if product % 2:
        raise AssertionError(f"power word tally must be even, got {product} at n={n} gap={gap}")
    return product // 2


def power_pair_excess(n: int, gap: int) -> int:
    """Pairs minus words over all fixed-gap power words of one base symbol."""
    words = power_word_count(n, gap)
    margins = margin_case_count(n, gap)
    phi = totient(gap + 1)
    if phi % 2:
        raise AssertionError("totient(gap+1) must be even for gap >= 2")
    return (words - margins) * (phi - 1) + margins * (phi // 2 - 1)


def single_one_pair_total(n: int) -> int:
    """Pairs generating the 2(n+1) words with a single minority symbol.

    Covers slopes on both halves of the circle; the below-half census sees
    exactly half of it.
    """
    if n < 3:
        raise ValueError(f"defined for n >= 3, got {n}")
    k = n // 2
    if n % 2:
        return 2 * sum(totient_sum(i + 1) for i in range(k, 2 * k + 1))
    return 2 * sum(totient_sum(i + 1) for i in range(k, 2 * k)) + totient_sum(k)


def same_slope_pair_count(n: int) -> int:
    """Ordered pairs of distinct length-n Sturmian words sharing a slope < 1/2."""
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    total = n * (n + 1)
    for p in range(3, n + 1):
        term = totient(p) * (n * n - p * p + n + p)
        if term % 2:
            raise AssertionError("pair-count term must be even for p >= 3")
        total += term // 2
    return total


def closed_form_count(length: int) -> int:
    """Exact number of binary rotation words of the given length (>= 4).

    Evaluated twice, as the expanded polynomial form and as the
    pairs-plus-corrections assembly; the two must agree.
    """
    if length < 4:
        raise ValueError(
            f"closed form holds for length >= 4, got {length}; "
            "use word_count for the small-length table"
        )
    n = length - 1
    half_sum = 0
    for p in range(3, n + 1):
        term = totient(p) * (n * n - p * p + n + p)
        if term % 2:
            raise AssertionError("half-sum term must be even for p >= 3")
        half_sum += term // 2
    excess = sum(power_pair_excess(n, gap) for gap in range(2, n))
    singles = single_one_pair_total(n)

    expanded = n * n + 3 * n + 4 + half_sum - singles - 2 * excess
    assembled = same_slope_pair_count(n) + 2 - singles + 2 * (n + 1) - 2 * excess
    if expanded != assembled:
        raise AssertionError(
            f"count assembly mismatch at length {length}: {expanded} != {assembled}"
        )
    return expanded


def word_count(length: int) -> int:
    """closed_form_count extended below length 4 by the oracle-pinned table."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if length <= 3:
        return SMALL_LENGTH_COUNTS[length]
    return closed_form_count(length)


def growth_ratio(length: int) -> float:
    """4*pi^2*count / (3*length^4); approaches 1 from below as length grows."""
    if length < 4:
        raise ValueError("growth ratio is defined for length >= 4")
    return 4 * math.pi**2 * closed_form_count(length) / (3 * length**4)


@dataclass(frozen=True)
class CountReport:
    """One table row: length, count, producing method, scaled ratio."""

    n: int
    f: int
    method: str
    ratio: float

    @classmethod
    def make(cls, n: int, f: int, method: str) -> "CountReport":
        return cls(n=n, f=f, method=method, ratio=4 * math.pi**2 * f / (3 * n**4))
