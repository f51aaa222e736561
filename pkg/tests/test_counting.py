import math

import pytest

from rotword.counting import (
    CountReport,
    SMALL_LENGTH_COUNTS,
    closed_form_count,
    growth_ratio,
    margin_case_count,
    power_pair_excess,
    power_word_count,
    power_word_tally,
    same_slope_pair_count,
    single_one_pair_total,
    word_count,
)
from rotword.rationals import farey_intervals
from rotword.rotation import (
    PowerForm,
    classify,
    enumerate_rotation_words,
    enumerate_via_pairs,
)
from rotword.sturmian import sturmian_language


def test_power_word_tally_examples():
    assert power_word_tally(5, 2) == 6
    assert power_word_tally(3, 2) == 2
    assert power_word_tally(6, 2) == 5
    with pytest.raises(ValueError):
        power_word_tally(5, 1)
    with pytest.raises(ValueError):
        power_word_tally(5, 5)


def test_margin_case_count_examples():
    assert margin_case_count(5, 2) == 3
    assert margin_case_count(3, 2) == 1
    assert margin_case_count(10, 2) == 3


def test_power_pair_excess_examples():
    assert power_pair_excess(6, 2) == 2
    assert power_pair_excess(5, 2) == 0
    assert power_pair_excess(3, 2) == 0


def test_power_word_count_is_integral_everywhere():
    # The halved tally product counts words, so it must always divide evenly.
    for n in range(3, 120):
        for gap in range(2, n):
            assert power_word_count(n, gap) >= 0


def test_power_word_count_matches_census():
    for n in (5, 7, 9, 11):
        census = enumerate_via_pairs(n, with_pairs=False)
        for gap in range(2, n):
            expected = power_word_count(n, gap)
            for base in (0, 1):
                got = sum(
                    1
                    for word in census.counts
                    if isinstance(form := classify(word), PowerForm)
                    and form.base == base
                    and form.gap == gap
                )
                assert got == expected, (n, gap, base)


def test_single_one_pair_total_examples():
    assert single_one_pair_total(3) == 12
    assert single_one_pair_total(4) == 22
    assert single_one_pair_total(5) == 40
    with pytest.raises(ValueError):
        single_one_pair_total(2)


def test_single_one_pair_total_matches_census():
    # The below-half census sees half the two-sided pair total per minority
    # symbol: summed over both symbol families it recovers the whole total.
    from rotword.rotation import SingleOne, SingleZero

    for n in (3, 5, 8, 10):
        census = enumerate_via_pairs(n, with_pairs=False)
        ones = sum(
            count for word, count in census.counts.items()
            if isinstance(classify(word), SingleOne)
        )
        zeros = sum(
            count for word, count in census.counts.items()
            if isinstance(classify(word), SingleZero)
        )
        assert ones == zeros == single_one_pair_total(n) // 2


def test_same_slope_pair_count_examples():
    assert same_slope_pair_count(1) == 2
    assert same_slope_pair_count(2) == 6
    assert same_slope_pair_count(3) == 18


def test_same_slope_pair_count_interval_sum():
    # Interval-by-interval: the first contributes n(n+1) ordered distinct
    # pairs, later ones n(n+1) - p(p-1) where p is the left denominator.
    for n in range(1, 26):
        total = 0
        for iv in farey_intervals(n, "below_half"):
            p = iv.left.denominator
            if p == 1:
                total += n * (n + 1)
            else:
                total += n * (n + 1) - p * (p - 1)
        assert total == same_slope_pair_count(n)


def test_same_slope_pair_count_brute():
    # Ordered distinct pairs that co-occur in at least one below-half language.
    for n in (2, 4, 6):
        seen = set()
        for iv in farey_intervals(n, "below_half"):
            language = sorted(sturmian_language(n, iv).words)
            for u in language:
                for v in language:
                    if u != v:
                        seen.add((u, v))
        assert len(seen) == same_slope_pair_count(n)


def test_closed_form_examples():
    assert closed_form_count(7) == 112
    assert closed_form_count(100) == 7155096
    assert closed_form_count(4) == 16
    with pytest.raises(ValueError):
        closed_form_count(3)


def test_closed_form_assembly_identity():
    # Expanded polynomial form versus pairs-plus-corrections assembly,
    # recomputed here rather than trusting the library's internal assert.
    from rotword.rationals import totient as phi

    for n in range(3, 201):
        half_sum = sum(phi(p) * (n * n - p * p + n + p) for p in range(3, n + 1)) // 2
        excess = sum(power_pair_excess(n, gap) for gap in range(2, n))
        singles = single_one_pair_total(n)
        expanded = n * n + 3 * n + 4 + half_sum - singles - 2 * excess
        assembled = (
            same_slope_pair_count(n) + 2 - singles + 2 * (n + 1) - 2 * excess
        )
        assert expanded == assembled == closed_form_count(n + 1)


def test_word_count_small_table():
    assert word_count(1) == 2
    assert word_count(2) == 4
    assert word_count(3) == 8
    assert word_count(4) == closed_form_count(4)
    with pytest.raises(ValueError):
        word_count(0)


def test_small_table_is_oracle_derived():
    for n, expected in SMALL_LENGTH_COUNTS.items():
        assert len(enumerate_rotation_words(n)) == expected


def test_closed_form_does_not_extend_below_its_domain():
    # Naive evaluation of the count expression below length 4 (its p- and
    # gap-sums are empty there; the single-minority term still makes sense as
    # a sum of special-word counts) disagrees with the true counts, which is
    # why the small-length table exists.
    from rotword.rationals import totient_sum

    def naive(n):
        k = n // 2
        if n % 2:
            singles = 2 * sum(totient_sum(i + 1) for i in range(k, 2 * k + 1))
        else:
            singles = 2 * sum(totient_sum(i + 1) for i in range(k, 2 * k)) + totient_sum(k)
        return n * n + 3 * n + 4 - singles

    assert naive(2) == 9 and word_count(3) == 8
    assert naive(1) == 6 and word_count(2) == 4
    with pytest.raises(ValueError):
        single_one_pair_total(2)


def test_growth_ratio_reference_points():
    assert abs(growth_ratio(6) - 0.65) <= 0.005
    assert abs(growth_ratio(30) - 0.83) <= 0.005
    assert abs(growth_ratio(100) - 0.94) <= 0.005
    with pytest.raises(ValueError):
        growth_ratio(3)


def test_count_report_ratio():
    report = CountReport.make(7, 112, "closed")
    assert report.ratio == pytest.approx(4 * math.pi**2 * 112 / (3 * 7**4), rel=1e-12)
