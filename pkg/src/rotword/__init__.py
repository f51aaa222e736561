"""rotword: exact counting and enumeration of binary rotation words.

Rotation words read off a circle rotation against a marked arc.  The package
provides the closed-form count per word length, a geometric grid oracle and a
Sturmian-pair oracle that both enumerate the full word sets independently,
the Sturmian/standard/central word machinery underneath, and a CLI that
cross-validates everything.
"""

from .counting import (
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
from .rationals import (
    FareyInterval,
    Fraction,
    farey,
    farey_intervals,
    format_fraction,
    mediant,
    totient,
    totient_sum,
)
from .rotation import (
    Constant,
    Plain,
    PowerForm,
    RotationParams,
    SingleOne,
    SingleZero,
    SturmianPair,
    WordCensus,
    WordForm,
    classify,
    enumerate_rotation_words,
    enumerate_via_pairs,
    form_tag,
    pair_to_rotation,
    predicted_pair_count,
    reconstruct_unique_pair,
    rotation_word,
)
from .sturmian import (
    StandardWordSequence,
    SturmianLanguage,
    bispecial_words,
    central_word,
    left_special_word,
    left_special_words,
    mechanical_word,
    new_words,
    right_special_word,
    slope_of_directive,
    standard_words,
    sturmian_language,
    swap_last_two,
)
from .words import WORD_CAP, BinaryWord

__version__ = "0.1.0"
