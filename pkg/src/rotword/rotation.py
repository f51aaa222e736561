"""Rotation words, the two enumeration oracles, and pair multiplicity laws.

A rotation word of length n is built from a circle rotation by a slope alpha
and a marked half-open arc [beta, gamma): symbol i is 1 iff {i*alpha} lies in
the arc.  Two independent routes enumerate all of them:

* the geometric oracle sweeps arc endpoints over a grid per Farey interval of
  slopes (plus the Farey fractions themselves), and
* the pair oracle rebuilds each word from ordered pairs (u, v) of equal-slope
  Sturmian words via the symbol recurrence r_k = r_{k-1} + u_k - v_k,
  recording how many pairs generate each word.

The census keyed by word carries the pair multiplicities that the closed-form
count's correction terms predict.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Literal, Sequence, TypeVar, Union

import numpy as np

from .kernels import get_backend
from .rationals import (
    FareyInterval,
    Fraction,
    SlopeRange,
    farey,
    farey_intervals,
    totient,
    totient_sum,
)
from .sturmian import _in_arc, language_symbol_matrix
from .words import WORD_CAP, BinaryWord

__all__ = [
    "RotationParams",
    "SturmianPair",
    "WordCensus",
    "Constant",
    "SingleOne",
    "SingleZero",
    "PowerForm",
    "Plain",
    "WordForm",
    "rotation_word",
    "enumerate_rotation_words",
    "pair_to_rotation",
    "enumerate_via_pairs",
    "reconstruct_unique_pair",
    "classify",
    "predicted_pair_count",
    "form_tag",
]

_T = TypeVar("_T")
_S = TypeVar("_S")

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RotationParams:
    """Slope and arc endpoints, all on the unit circle [0, 1)."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        for name, value in (("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)):
            if not 0 <= value < 1:
                raise ValueError(f"{name} must lie in [0, 1), got {value}")


@dataclass(frozen=True)
class SturmianPair:
    """Ordered generating pair drawn from one Farey interval's language."""

    u: BinaryWord
    v: BinaryWord
    interval: FareyInterval


@dataclass(frozen=True)
class Constant:
    symbol: int


@dataclass(frozen=True)
class SingleOne:
    index: int


@dataclass(frozen=True)
class SingleZero:
    index: int


@dataclass(frozen=True)
class PowerForm:
    """base^head (other base^gap)^repeats other base^tail, with equal gaps."""

    base: int
    head: int
    gap: int
    repeats: int
    tail: int


@dataclass(frozen=True)
class Plain:
    pass


WordForm = Union[Constant, SingleOne, SingleZero, PowerForm, Plain]

_FORM_TAGS = {Constant: "CONST", SingleOne: "ONE1", SingleZero: "ONE0", PowerForm: "POW", Plain: "PLAIN"}


def form_tag(form: WordForm) -> str:
    return _FORM_TAGS[type(form)]


def rotation_word(params: RotationParams, n: int) -> BinaryWord:
    """Symbols r_i = [{i*alpha} in [beta, gamma)], exact arithmetic.

    beta >= gamma wraps the arc around 0; equal endpoints therefore mean the
    full circle and give the all-ones word.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    return BinaryWord(
        1 if _in_arc((i * params.alpha) % 1, params.beta, params.gamma) else 0
        for i in range(n)
    )


def _parallel_map(fn: Callable[[_T], _S], items: Sequence[_T], parallelism: int) -> list[_S]:
    if parallelism <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, items))


def _packed_to_keys(packed: np.ndarray) -> set[int]:
    return {int(lo) | (int(hi) << 64) for lo, hi in packed.tolist()}


def enumerate_rotation_words(
    n: int,
    slope_range: SlopeRange = "full",
    include_farey_endpoints: bool = True,
    beta_equals_gamma: Literal["full", "empty"] = "full",
    parallelism: int = 1,
) -> set[BinaryWord]:
    """Geometric oracle: all rotation words of length n by exhaustive grids.

    For every Farey interval of order n the slope is fixed at the interval
    mediant a/D and both arc endpoints range over the full grid {j/D}; the
    grid contains the whole orbit plus at least one free point (D >= n+1), so
    every arc membership pattern, including the empty arc, has a grid
    representative.  With include_farey_endpoints the Farey fractions q/p are
    additionally swept as slopes over their own grid {j/p}.  The
    beta_equals_gamma convention is only a cross-check knob: "full" treats a
    degenerate arc as the whole circle (the wraparound reading), "empty"
    drops it; the resulting set must not depend on the choice.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    if n > WORD_CAP:
        raise ValueError(f"length exceeds the {WORD_CAP}-symbol word cap")
    if beta_equals_gamma not in ("full", "empty"):
        raise ValueError("beta_equals_gamma must be 'full' or 'empty'")
    equal_full = beta_equals_gamma == "full"

    slopes: list[tuple[int, int]] = []
    for interval in farey_intervals(n, slope_range):
        med = interval.mediant
        slopes.append((med.numerator, med.denominator))
    if include_farey_endpoints:
        for fraction in farey(n):
            if slope_range == "below_half" and fraction > _HALF:
                continue
            slopes.append((fraction.numerator, fraction.denominator))

    backend = get_backend()

    def run(slope: tuple[int, int]) -> set[int]:
        a, d = slope
        return _packed_to_keys(backend.rotation_grid_words(a, d, n, equal_full))

    keys: set[int] = set()
    for chunk in _parallel_map(run, slopes, parallelism):
        keys |= chunk
    return {BinaryWord.from_bits(k, n) for k in keys}


def pair_to_rotation(u: BinaryWord, v: BinaryWord) -> frozenset[BinaryWord]:
    """Rotation words generated by the ordered pair via r_k = r_{k-1} + u_k - v_k.

    Equal words leave the first symbol free and give both constant words; a
    valid distinct pair pins it and gives exactly one word.  Pairs are
    rejected when the difference prefix sums stray outside {-1, 0} and
    {0, 1}: no first symbol keeps every r_k binary then, so the words cannot
    share a slope.
    """
    n = len(u)
    if n != len(v):
        raise ValueError("pair words must have equal length")
    if n < 1:
        raise ValueError("pair words must be non-empty")
    sums = []
    running = 0
    for k in range(n):
        running += u[k] - v[k]
        sums.append(running)
    top, bottom = max(sums), min(sums)
    if top == bottom == 0:
        return frozenset(
            (BinaryWord.constant(0, n + 1), BinaryWord.constant(1, n + 1))
        )
    if not ((bottom >= 0 and top == 1) or (top <= 0 and bottom == -1)):
        raise ValueError("not a same-slope Sturmian pair: prefix sums leave {-1,0,1}")
    first = 1 if bottom == -1 else 0
    return frozenset((BinaryWord([first] + [first + s for s in sums]),))


def reconstruct_unique_pair(r: BinaryWord) -> tuple[BinaryWord, BinaryWord]:
    """Invert the pair recurrence for words containing both 00 and 11.

    Such words force u_k = v_k = 0 wherever two ones are adjacent, and
    (u_k, v_k) = (r_k, r_{k-1}) elsewhere, so the generating pair is unique.
    """
    if not (
        r.contains_factor(BinaryWord("00")) and r.contains_factor(BinaryWord("11"))
    ):
        raise ValueError("word must contain both factors 00 and 11")
    u = []
    v = []
    for k in range(1, len(r)):
        if r[k - 1] == 1 and r[k] == 1:
            u.append(0)
            v.append(0)
        else:
            u.append(r[k])
            v.append(r[k - 1])
    return BinaryWord(u), BinaryWord(v)


@dataclass
class WordCensus:
    """Pair multiplicities per rotation word of one length.

    counts maps each word to the number of distinct ordered same-slope pairs
    generating it (pairs deduplicated across intervals); pairs optionally
    materializes those pairs, tagged with the first interval they occur in.
    """

    length: int
    counts: dict[BinaryWord, int]
    pairs: dict[BinaryWord, list[SturmianPair]] | None = None

    def __len__(self) -> int:
        return len(self.counts)

    def words(self) -> set[BinaryWord]:
        return set(self.counts)

    def multiplicity(self, word: BinaryWord) -> int:
        return self.counts[word]


def enumerate_via_pairs(
    n: int, with_pairs: bool = True, parallelism: int = 1
) -> WordCensus:
    """Pair oracle: census of length-(n+1) rotation words from length-n pairs.

    Walks the below-half Farey intervals of order n left to right; in each
    language, ordered pairs with at least one word unseen in earlier
    languages are new, everything else was already counted in a common
    earlier language.  Equal-word pairs feed both constant words.
    """
    if n < 1:
        raise ValueError("pair length must be >= 1")
    if n + 1 > WORD_CAP:
        raise ValueError(f"census words exceed the {WORD_CAP}-symbol word cap")
    intervals = farey_intervals(n, "below_half")
    languages = _parallel_map(
        lambda interval: language_symbol_matrix(n, interval), intervals, parallelism
    )

    backend = get_backend()
    seen: set[int] = set()
    masks = []
    for keys, _ in languages:
        mask = np.fromiter((k not in seen for k in keys), dtype=bool, count=len(keys))
        masks.append(mask)
        seen.update(keys)

    def run(index: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        _, symbols = languages[index]
        words, u_idx, v_idx, invalid = backend.pair_words(symbols, masks[index])
        if invalid:
            raise AssertionError(
                f"{invalid} same-language pairs failed the slope-consistency check "
                f"in {intervals[index]}"
            )
        return words, u_idx, v_idx

    results = _parallel_map(run, list(range(len(intervals))), parallelism)

    zero_key = 0
    ones_key = (1 << (n + 1)) - 1
    diagonal_total = sum(int(mask.sum()) for mask in masks)
    counts_by_key: dict[int, int] = {zero_key: diagonal_total, ones_key: diagonal_total}
    pair_store: dict[int, list[tuple[int, int, int]]] | None = None

    if with_pairs:
        pair_store = {zero_key: [], ones_key: []}
        for index, (keys, _) in enumerate(languages):
            for key, flag in zip(keys, masks[index]):
                if flag:
                    pair_store[zero_key].append((key, key, index))
                    pair_store[ones_key].append((key, key, index))
        for index, (words, u_idx, v_idx) in enumerate(results):
            keys = languages[index][0]
            for (lo, hi), ui, vi in zip(words.tolist(), u_idx.tolist(), v_idx.tolist()):
                wkey = int(lo) | (int(hi) << 64)
                counts_by_key[wkey] = counts_by_key.get(wkey, 0) + 1
                pair_store.setdefault(wkey, []).append((keys[ui], keys[vi], index))
    else:
        batches = [words for words, _, _ in results if len(words)]
        if batches:
            stacked = np.vstack(batches)
            unique, tallies = np.unique(stacked, axis=0, return_counts=True)
            for (lo, hi), tally in zip(unique.tolist(), tallies.tolist()):
                wkey = int(lo) | (int(hi) << 64)
                counts_by_key[wkey] = counts_by_key.get(wkey, 0) + int(tally)

    counts = {
        BinaryWord.from_bits(key, n + 1): count for key, count in counts_by_key.items()
    }
    pairs = None
    if pair_store is not None:
        pairs = {}
        for key, raw in pair_store.items():
            pairs[BinaryWord.from_bits(key, n + 1)] = [
                SturmianPair(
                    BinaryWord.from_bits(ukey, n),
                    BinaryWord.from_bits(vkey, n),
                    intervals[index],
                )
                for ukey, vkey, index in raw
            ]
    return WordCensus(length=n + 1, counts=counts, pairs=pairs)


def classify(r: BinaryWord) -> WordForm:
    """Structural form of a rotation word, driving its multiplicity prediction."""
    n = len(r)
    if n < 1:
        raise ValueError("cannot classify the empty word")
    ones = r.count(1)
    if ones == 0:
        return Constant(0)
    if ones == n:
        return Constant(1)
    if ones == 1:
        return SingleOne(next(i for i in range(n) if r[i] == 1))
    if ones == n - 1:
        return SingleZero(next(i for i in range(n) if r[i] == 0))
    for base in (0, 1):
        marker = 1 - base
        if r.contains_factor(BinaryWord((marker, marker))):
            continue
        positions = [i for i in range(n) if r[i] == marker]
        gaps = {b - a - 1 for a, b in zip(positions, positions[1:])}
        if len(gaps) == 1:
            return PowerForm(
                base=base,
                head=positions[0],
                gap=gaps.pop(),
                repeats=len(positions) - 1,
                tail=n - 1 - positions[-1],
            )
    return Plain()


def predicted_pair_count(form: WordForm, wordlen: int) -> int:
    """Predicted census multiplicity for a non-constant word of this form.

    Defined for words of length n+1 built from pairs of length n >= 3.
    """
    n = wordlen - 1
    if n < 3:
        raise ValueError("multiplicity predictions need word length >= 4")
    if isinstance(form, Constant):
        raise ValueError("constant words have interval-dependent multiplicity")
    if isinstance(form, Plain):
        return 1
    if isinstance(form, PowerForm):
        if form.gap == 1:
            return 1
        phi = totient(form.gap + 1)
        if phi % 2:
            raise AssertionError("totient of gap+1 >= 3 must be even")
        if form.head <= form.gap and form.tail <= form.gap:
            return phi // 2
        return phi
    if isinstance(form, (SingleOne, SingleZero)):
        index = form.index
        total = totient_sum(max(index, n - index))
        if total % 2:
            raise AssertionError("special-word total must be even for n >= 3")
        return total // 2
    raise TypeError(f"unknown word form {form!r}")
