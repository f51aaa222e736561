from collections import Counter
from fractions import Fraction

import pytest

from rotword.counting import same_slope_pair_count, word_count
from rotword.rationals import farey, farey_intervals
from rotword.rotation import (
    Constant,
    Plain,
    PowerForm,
    RotationParams,
    SingleOne,
    SingleZero,
    classify,
    enumerate_rotation_words,
    enumerate_via_pairs,
    form_tag,
    pair_to_rotation,
    predicted_pair_count,
    reconstruct_unique_pair,
    rotation_word,
)
from rotword.sturmian import sturmian_language
from rotword.words import BinaryWord


def w(text: str) -> BinaryWord:
    return BinaryWord(text)


# --- independent brute-force routes ---


def brute_geometric(n):
    """Scalar re-derivation of the grid oracle with exact fractions."""
    words = set()
    slopes = [iv.mediant for iv in farey_intervals(n, "full")]
    slopes += [f % 1 for f in farey(n)]
    for alpha in slopes:
        d = alpha.denominator
        for j in range(d):
            for j2 in range(d):
                params = RotationParams(alpha, Fraction(j, d), Fraction(j2, d))
                words.add(rotation_word(params, n))
    return words


def brute_pair_census(n):
    """Census with a global pair set: no new/old bookkeeping to trust."""
    counts: Counter = Counter()
    seen = set()
    for iv in farey_intervals(n, "below_half"):
        language = sorted(sturmian_language(n, iv).words)
        for u in language:
            for v in language:
                if (u, v) in seen:
                    continue
                seen.add((u, v))
                for word in pair_to_rotation(u, v):
                    counts[word] += 1
    return counts


# --- rotation_word ---


def test_rotation_word_examples():
    assert str(rotation_word(RotationParams(Fraction(1, 4), Fraction(0), Fraction(1, 2)), 4)) == "1100"
    # equal arc endpoints wrap to the full circle
    assert str(rotation_word(RotationParams(Fraction(1, 3), Fraction(1, 4), Fraction(1, 4)), 3)) == "111"
    assert str(rotation_word(RotationParams(Fraction(2, 5), Fraction(0), Fraction(2, 5)), 5)) == "10010"


def test_rotation_params_validated():
    with pytest.raises(ValueError):
        RotationParams(Fraction(1), Fraction(0), Fraction(0))
    with pytest.raises(ValueError):
        RotationParams(Fraction(1, 2), Fraction(-1, 3), Fraction(0))


# --- geometric oracle ---


def test_enumerate_small_counts():
    assert {str(x) for x in enumerate_rotation_words(1)} == {"0", "1"}
    assert len(enumerate_rotation_words(4)) == 16
    assert len(enumerate_rotation_words(7)) == 112


def test_enumerate_matches_scalar_brute_force():
    for n in range(1, 8):
        assert enumerate_rotation_words(n) == brute_geometric(n)


def test_slope_range_below_half_suffices():
    for n in range(1, 11):
        assert enumerate_rotation_words(n, slope_range="below_half") == enumerate_rotation_words(n)


def test_endpoint_slopes_add_nothing():
    for n in range(1, 11):
        assert enumerate_rotation_words(n, include_farey_endpoints=False) == enumerate_rotation_words(n)


def test_degenerate_arc_convention_is_neutral():
    for n in range(1, 9):
        assert enumerate_rotation_words(n, beta_equals_gamma="empty") == enumerate_rotation_words(n)


def test_enumeration_closed_under_reversal_and_complement():
    for n in (3, 6, 9):
        words = enumerate_rotation_words(n)
        assert {x.reverse() for x in words} == words
        assert {x.complement() for x in words} == words


def test_factor_windows_stay_rotation_words():
    full = {n: enumerate_rotation_words(n) for n in range(1, 9)}
    for n in (5, 8):
        for word in full[n]:
            for m in range(1, n):
                for start in range(n - m + 1):
                    assert word[start : start + m] in full[m]


def test_parallel_enumeration_is_identical():
    assert enumerate_rotation_words(9, parallelism=4) == enumerate_rotation_words(9)


# --- pair reconstruction ---


def test_pair_to_rotation_examples():
    assert pair_to_rotation(w("000"), w("000")) == {w("0000"), w("1111")}
    assert pair_to_rotation(w("010"), w("001")) == {w("0010")}
    assert pair_to_rotation(w("001"), w("100")) == {w("1001")}
    with pytest.raises(ValueError):
        pair_to_rotation(w("100"), w("011"))
    with pytest.raises(ValueError):
        pair_to_rotation(w("11"), w("00"))
    with pytest.raises(ValueError):
        pair_to_rotation(w("01"), w("010"))


def test_language_pairs_never_invalid():
    for n in (2, 5, 8):
        for iv in farey_intervals(n, "below_half"):
            language = sturmian_language(n, iv).words
            for u in language:
                for v in language:
                    result = pair_to_rotation(u, v)
                    assert len(result) == (2 if u == v else 1)


def test_reconstruct_unique_pair_examples():
    assert reconstruct_unique_pair(w("0011")) == (w("010"), w("000"))
    assert reconstruct_unique_pair(w("1100")) == (w("000"), w("010"))
    with pytest.raises(ValueError):
        reconstruct_unique_pair(w("0110"))


def test_reconstruct_roundtrip():
    for n in (5, 7):
        for word in enumerate_rotation_words(n):
            if word.contains_factor(w("00")) and word.contains_factor(w("11")):
                u, v = reconstruct_unique_pair(word)
                assert pair_to_rotation(u, v) == {word}


# --- census ---


def test_census_key_counts():
    assert len(enumerate_via_pairs(3)) == 16
    assert len(enumerate_via_pairs(6)) == 112


def test_census_equals_geometric_sets():
    for n in range(1, 20):
        assert enumerate_via_pairs(n, with_pairs=False).words() == enumerate_rotation_words(n + 1)


def test_census_matches_global_pair_dedup():
    # The production census skips pairs of already-seen words; the brute
    # route dedups explicit pair sets.  They must agree multiplicity by
    # multiplicity.
    for n in range(1, 10):
        brute = brute_pair_census(n)
        census = enumerate_via_pairs(n)
        assert census.counts == dict(brute)


def test_census_pair_dedup_totals():
    for n in (3, 6, 10):
        census = enumerate_via_pairs(n)
        nonconstant = sum(
            count
            for word, count in census.counts.items()
            if word.count(1) not in (0, len(word))
        )
        assert nonconstant == same_slope_pair_count(n)


def test_census_pairs_regenerate_their_word():
    census = enumerate_via_pairs(6)
    for word, pairs in census.pairs.items():
        assert census.counts[word] == len(pairs)
        for pair in pairs:
            assert word in pair_to_rotation(pair.u, pair.v)
            language = sturmian_language(6, pair.interval).words
            assert pair.u in language and pair.v in language


def test_census_with_and_without_pairs_agree():
    for n in (4, 7):
        assert (
            enumerate_via_pairs(n, with_pairs=False).counts
            == enumerate_via_pairs(n).counts
        )


def test_census_parallel_identical():
    base = enumerate_via_pairs(8)
    threaded = enumerate_via_pairs(8, parallelism=4)
    assert base.counts == threaded.counts
    assert base.pairs == threaded.pairs


# --- classification ---


def test_classify_examples():
    assert classify(w("0010010")) == PowerForm(base=0, head=2, gap=2, repeats=1, tail=1)
    assert classify(w("0001000")) == SingleOne(3)
    assert classify(w("0101100")) == Plain()
    assert classify(w("0000")) == Constant(0)
    assert classify(w("111")) == Constant(1)
    assert classify(w("1011")) == SingleZero(1)
    assert classify(w("0110")) == PowerForm(base=1, head=0, gap=2, repeats=1, tail=0)
    # alternating words parse as base-0 power words
    assert classify(w("0101")) == PowerForm(base=0, head=1, gap=1, repeats=1, tail=0)


def test_classify_tags():
    assert form_tag(Constant(0)) == "CONST"
    assert form_tag(SingleOne(2)) == "ONE1"
    assert form_tag(SingleZero(2)) == "ONE0"
    assert form_tag(PowerForm(0, 1, 2, 1, 0)) == "POW"
    assert form_tag(Plain()) == "PLAIN"


def test_power_form_reconstructs_word():
    for text in ("0010010", "0110", "0101", "100100100", "110110"):
        form = classify(w(text))
        assert isinstance(form, PowerForm)
        base = BinaryWord([form.base])
        other = BinaryWord([1 - form.base])
        rebuilt = (
            base * form.head
            + (other + base * form.gap) * form.repeats
            + other
            + base * form.tail
        )
        assert rebuilt == w(text)
        assert len(rebuilt) == form.head + form.repeats * (form.gap + 1) + 1 + form.tail


def test_predicted_pair_count_examples():
    assert predicted_pair_count(PowerForm(0, head=1, gap=2, repeats=2, tail=1), 9) == 1
    assert predicted_pair_count(PowerForm(0, head=3, gap=2, repeats=1, tail=0), 7) == 2
    assert predicted_pair_count(SingleOne(3), 7) == 2
    assert predicted_pair_count(Plain(), 8) == 1
    assert predicted_pair_count(PowerForm(0, head=0, gap=1, repeats=3, tail=2), 9) == 1
    with pytest.raises(ValueError):
        predicted_pair_count(Constant(0), 8)
    with pytest.raises(ValueError):
        predicted_pair_count(Plain(), 3)


def test_census_multiplicities_match_predictions():
    for n in range(3, 11):
        census = enumerate_via_pairs(n)
        for word, count in census.counts.items():
            form = classify(word)
            if isinstance(form, Constant):
                continue
            assert predicted_pair_count(form, n + 1) == count, str(word)


def test_census_agrees_with_closed_form():
    for n in range(2, 13):
        assert len(enumerate_via_pairs(n - 1, with_pairs=False)) == word_count(n)
