"""Exact character tables and distinct-degree checks for small finite groups."""

from ._camina import (
    CharacterTable,
    Group,
    TheoremViolation,
    bch_scan,
    camina_pair,
    classify,
    dade_check,
    has_property_d,
    higgs,
    orbit_sizes,
    run_corpus,
)

__all__ = [
    "CharacterTable",
    "Group",
    "TheoremViolation",
    "bch_scan",
    "camina_pair",
    "classify",
    "dade_check",
    "has_property_d",
    "higgs",
    "orbit_sizes",
    "run_corpus",
]
