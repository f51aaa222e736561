"""Exact rationals, Euler totients and Farey interval generation.

Fractions are plain ``fractions.Fraction`` values (always reduced, immutable,
totally ordered); this module adds the number-theoretic helpers the rest of
the package is built on: a growable totient sieve, Farey sequences via the
next-term recurrence, mediants, and Farey intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

__all__ = [
    "Fraction",
    "FareyInterval",
    "totient",
    "totient_sum",
    "farey",
    "mediant",
    "farey_intervals",
    "format_fraction",
]

SlopeRange = Literal["full", "below_half"]

_HALF = Fraction(1, 2)

# Sieve caches, grown on demand.  _phi[m] = totient(m); _phi_sum[m] = sum of
# _phi[1..m].  Index 0 is a placeholder.
_phi: list[int] = [0, 1]
_phi_sum: list[int] = [0, 1]


def _ensure_sieve(limit: int) -> None:
    if limit < len(_phi):
        return
    size = max(limit + 1, 2 * len(_phi))
    phi = list(range(size))
    for p in range(2, size):
        if phi[p] == p:  # p prime
            for multiple in range(p, size, p):
                phi[multiple] -= phi[multiple] // p
    phi[0] = 0
    running = 0
    sums = [0] * size
    for m in range(1, size):
        running += phi[m]
        sums[m] = running
    _phi[:] = phi
    _phi_sum[:] = sums


def totient(m: int) -> int:
    """Euler's totient: how many of 1..m are coprime to m."""
    if m < 1:
        raise ValueError(f"totient requires m >= 1, got {m}")
    _ensure_sieve(m)
    return _phi[m]


def totient_sum(m: int) -> int:
    """Summatory totient over 1..m; zero for m = 0."""
    if m < 0:
        raise ValueError(f"totient_sum requires m >= 0, got {m}")
    if m == 0:
        return 0
    _ensure_sieve(m)
    return _phi_sum[m]


def farey(order: int) -> list[Fraction]:
    """Farey sequence of the given order, increasing from 0/1 to 1/1."""
    if order < 1:
        raise ValueError(f"farey order must be >= 1, got {order}")
    # Next-term recurrence from two consecutive members: O(length) and exact.
    result = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, order
    while (a, b) != (1, 1):
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        result.append(Fraction(a, b))
    return result


def mediant(a: Fraction, b: Fraction) -> Fraction:
    """Mediant (a.num + b.num) / (a.den + b.den) of two fractions with a < b."""
    if a >= b:
        raise ValueError(f"mediant requires a < b, got {a} >= {b}")
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


@dataclass(frozen=True)
class FareyInterval:
    """Pair of adjacent Farey fractions of a given order."""

    left: Fraction
    right: Fraction
    order: int

    def __post_init__(self) -> None:
        if not self.left < self.right:
            raise ValueError(f"interval endpoints out of order: {self.left}, {self.right}")
        if self.left.denominator > self.order or self.right.denominator > self.order:
            raise ValueError("endpoint denominator exceeds the interval order")
        det = (
            self.right.numerator * self.left.denominator
            - self.left.numerator * self.right.denominator
        )
        if det != 1:
            raise ValueError(f"{self.left} and {self.right} are not Farey neighbours")

    @property
    def mediant(self) -> Fraction:
        return mediant(self.left, self.right)

    def __str__(self) -> str:
        return f"[{format_fraction(self.left)},{format_fraction(self.right)})"


def farey_intervals(order: int, slope_range: SlopeRange = "full") -> list[FareyInterval]:
    """Consecutive Farey pairs of the order; below_half keeps left endpoints < 1/2."""
    sequence = farey(order)
    intervals = [
        FareyInterval(lo, hi, order) for lo, hi in zip(sequence, sequence[1:])
    ]
    if slope_range == "below_half":
        return [iv for iv in intervals if iv.left < _HALF]
    if slope_range != "full":
        raise ValueError(f"unknown slope range {slope_range!r}")
    return intervals


def format_fraction(value: Fraction) -> str:
    """Render as num/den even for integers (0/1, 1/1)."""
    return f"{value.numerator}/{value.denominator}"
