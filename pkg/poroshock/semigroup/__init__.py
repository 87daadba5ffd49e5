from poroshock.semigroup.checks import (
    check_conservation,
    check_l1_contraction,
    check_monotone,
    check_translation,
    contraction_excess,
    constancy_gap,
    far_field_gap,
    translate,
    translation_tolerance,
)
from poroshock.semigroup.suite import run_suite

__all__ = [
    "check_conservation",
    "check_l1_contraction",
    "check_monotone",
    "check_translation",
    "constancy_gap",
    "contraction_excess",
    "far_field_gap",
    "run_suite",
    "translate",
    "translation_tolerance",
]
