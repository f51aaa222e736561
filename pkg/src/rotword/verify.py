"""Cross-method verification: formulas vs oracles vs structural laws.

Each check returns a CheckResult; the CLI prints one line per result and
fails the run when any check fails.  Everything here is exact arithmetic, so
a failure always means a real disagreement, not noise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import (
    SMALL_LENGTH_COUNTS,
    closed_form_count,
    growth_ratio,
    power_pair_excess,
    same_slope_pair_count,
    single_one_pair_total,
    word_count,
)
from .rationals import farey_intervals, totient, totient_sum
from .rotation import (
    Constant,
    PowerForm,
    SingleOne,
    SingleZero,
    classify,
    enumerate_rotation_words,
    enumerate_via_pairs,
    predicted_pair_count,
    reconstruct_unique_pair,
)
from .sturmian import left_special_words, new_words, sturmian_language
from .words import BinaryWord

__all__ = ["CheckResult", "run_verification", "TABLE_COUNTS", "TABLE_RATIOS"]

# Reference values reproduced by the closed form (exact counts and the
# 2-decimal scaled-ratio row).
TABLE_COUNTS = {
    6: 64,
    7: 112,
    10: 504,
    15: 2804,
    20: 9442,
    30: 51306,
    50: 423814,
    75: 2222984,
    100: 7155096,
}
TABLE_RATIOS = {
    6: 0.65,
    7: 0.61,
    10: 0.66,
    15: 0.73,
    20: 0.78,
    30: 0.83,
    50: 0.89,
    75: 0.92,
    100: 0.94,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, failures: list[str]) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:5]))
    return CheckResult(name, True)


def check_reference_table() -> CheckResult:
    failures = []
    for n, expected in TABLE_COUNTS.items():
        got = closed_form_count(n)
        if got != expected:
            failures.append(f"f({n})={got}, expected {expected}")
    for n, expected in TABLE_RATIOS.items():
        got = round(growth_ratio(n), 2)
        if abs(got - expected) > 0.005:
            failures.append(f"ratio({n})={got}, expected {expected}")
    return _result("reference-table", failures)


def check_assembly_identity(max_n: int = 200) -> CheckResult:
    # closed_form_count evaluates both the expanded and the assembled form
    # and raises on divergence.
    failures = []
    for length in range(4, max_n + 2):
        try:
            closed_form_count(length)
        except AssertionError as exc:
            failures.append(str(exc))
    return _result("assembly-identity", failures)


def check_method_agreement(max_n: int, parallelism: int = 1) -> list[CheckResult]:
    results = []
    for n in range(1, max_n + 1):
        failures = []
        expected = word_count(n)
        geometric = enumerate_rotation_words(n, parallelism=parallelism)
        if len(geometric) != expected:
            failures.append(f"geometric count {len(geometric)} != closed {expected}")
        if n >= 2:
            census = enumerate_via_pairs(n - 1, with_pairs=False, parallelism=parallelism)
            if len(census) != expected:
                failures.append(f"pairs count {len(census)} != closed {expected}")
            if census.words() != geometric:
                diff = len(census.words() ^ geometric)
                failures.append(f"oracle word sets differ in {diff} words")
        results.append(_result(f"method-agreement n={n}", failures))
    return results


def check_small_floor() -> CheckResult:
    failures = []
    for n, expected in SMALL_LENGTH_COUNTS.items():
        for endpoints in (True, False):
            got = len(enumerate_rotation_words(n, include_farey_endpoints=endpoints))
            if got != expected:
                failures.append(f"n={n} endpoints={endpoints}: {got} != {expected}")
    return _result("small-length-floor", failures)


def check_oracle_conventions(max_n: int) -> CheckResult:
    """Slope range, endpoint slopes and the degenerate-arc convention are all
    representation choices; none may change the enumerated set."""
    failures = []
    for n in range(1, max_n + 1):
        full = enumerate_rotation_words(n)
        if enumerate_rotation_words(n, slope_range="below_half") != full:
            failures.append(f"n={n}: below-half slopes lost words")
        if enumerate_rotation_words(n, include_farey_endpoints=False) != full:
            failures.append(f"n={n}: endpoint slopes changed the set")
        if enumerate_rotation_words(n, beta_equals_gamma="empty") != full:
            failures.append(f"n={n}: degenerate-arc convention changed the set")
    return _result("oracle-conventions", failures)


def check_sturmian_census(max_n: int) -> CheckResult:
    failures = []
    for n in range(1, max_n + 1):
        union: set = set()
        for interval in farey_intervals(n, "full"):
            fresh = new_words(n, interval)
            language = sturmian_language(n, interval).words
            if len(language) != n + 1:
                failures.append(f"|St({n},{interval})| = {len(language)}")
            p = interval.left.denominator
            expected_new = n + 1 if p == 1 else n - p + 1
            if len(fresh) != expected_new:
                failures.append(
                    f"new words of {interval} at n={n}: {len(fresh)} != {expected_new}"
                )
            union |= set(language)
        formula = 1 + sum((n - p + 1) * totient(p) for p in range(1, n + 1))
        if len(union) != formula:
            failures.append(f"union at n={n}: {len(union)} != {formula}")
    return _result("sturmian-census", failures)


def check_left_special_counts(max_n: int) -> CheckResult:
    failures = []
    for n in range(1, max_n + 1):
        got = len(left_special_words(n))
        expected = totient_sum(n + 1)
        if got != expected:
            failures.append(f"n={n}: {got} != {expected}")
    return _result("left-special-count", failures)


def check_multiplicity_laws(max_pair_len: int, parallelism: int = 1) -> CheckResult:
    failures = []
    zero_zero = BinaryWord("00")
    one_one = BinaryWord("11")
    for n in range(3, max_pair_len + 1):
        census = enumerate_via_pairs(n, parallelism=parallelism)
        nonconst_total = 0
        singles = 0
        excess = 0
        for word, count in census.counts.items():
            form = classify(word)
            if isinstance(form, Constant):
                continue
            nonconst_total += count
            if isinstance(form, (SingleOne, SingleZero)):
                singles += count
            if isinstance(form, PowerForm) and form.gap >= 2:
                excess += count - 1
            predicted = predicted_pair_count(form, n + 1)
            if predicted != count:
                failures.append(f"n={n} word {word}: census {count}, predicted {predicted}")
            if word.contains_factor(zero_zero) and word.contains_factor(one_one):
                pair = census.pairs[word]
                u, v = reconstruct_unique_pair(word)
                if len(pair) != 1 or pair[0].u != u or pair[0].v != v:
                    failures.append(f"n={n} word {word}: unique-pair reconstruction differs")
        if nonconst_total != same_slope_pair_count(n):
            failures.append(
                f"n={n}: non-constant multiplicities sum to {nonconst_total}, "
                f"expected {same_slope_pair_count(n)}"
            )
        if singles != single_one_pair_total(n):
            failures.append(
                f"n={n}: single-minority multiplicities sum to {singles}, "
                f"expected {single_one_pair_total(n)}"
            )
        expected_excess = 2 * sum(power_pair_excess(n, gap) for gap in range(2, n))
        if excess != expected_excess:
            failures.append(
                f"n={n}: power-word excess {excess}, expected {expected_excess}"
            )
    return _result("multiplicity-laws", failures)


def run_verification(max_n: int = 12, parallelism: int = 1) -> list[CheckResult]:
    """Every check at sizes bounded by max_n; exact, deterministic."""
    results = [check_reference_table(), check_assembly_identity()]
    results.extend(check_method_agreement(max_n, parallelism))
    results.append(check_small_floor())
    results.append(check_oracle_conventions(min(max_n, 10)))
    results.append(check_sturmian_census(min(max_n, 15)))
    results.append(check_left_special_counts(min(max_n, 12)))
    results.append(check_multiplicity_laws(min(max_n - 1, 12), parallelism))
    return results
