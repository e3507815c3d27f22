"""Worked three-alternative example: a RAM-UR dataset that two different
attention functions (under two different preferences) both rationalize."""

from __future__ import annotations

from fractions import Fraction as F

from .core import AttentionFunction, PreferenceRelation, StochasticChoiceFunction, validate_scf

EXAMPLE1_ROWS = {
    ("a",): {"a": "1"},
    ("b",): {"b": "1/2"},
    ("c",): {"c": "1/2"},
    ("a", "b"): {"a": "1/2", "b": "1/2"},
    ("a", "c"): {"a": "1/2", "c": "1/2"},
    ("b", "c"): {"b": "1/4", "c": "1/2"},
    ("a", "b", "c"): {"a": "1/4", "b": "1/2", "c": "1/4"},
}


def example1() -> StochasticChoiceFunction:
    return validate_scf({frozenset(m): p for m, p in EXAMPLE1_ROWS.items()}, ["a", "b", "c"])


def _attention(rows) -> AttentionFunction:
    table = {frozenset(A): {frozenset(D): m for D, m in row.items()} for A, row in rows.items()}
    return AttentionFunction(frozenset("a"), table)


# Alternative attention function for the preference c > b > a. Entries that
# follow from the menu masses summing to one are filled in (the {a} set in
# {a,b} and {a,c}, and the empty set in reference-free menus).
_MU2_COMMON = {
    "abc": {"ab": F(1, 2), "a": F(1, 4), "ac": F(1, 8), "abc": F(1, 8)},
    "ab": {"ab": F(1, 2), "a": F(1, 2)},
    "ac": {"ac": F(1, 2), "a": F(1, 2)},
    "a": {"a": F(1)},
    "b": {"b": F(1, 2), "": F(1, 2)},
    "c": {"c": F(1, 2), "": F(1, 2)},
}


def mu2() -> AttentionFunction:
    """The alternative attention function, with the {b,c} row chosen so that
    c > b > a reproduces p(b,{b,c}) = 1/4 and p(c,{b,c}) = 1/2."""
    rows = dict(_MU2_COMMON)
    rows["bc"] = {"b": F(1, 4), "bc": F(1, 8), "c": F(3, 8), "": F(1, 4)}
    return _attention(rows)


def mu2_as_printed() -> AttentionFunction:
    """Same table with the {b,c} row exactly as first written down
    ({b}: 1/8, {b,c}: 1/8, {c}: 1/2). Under c > b > a it gives p(b,{b,c}) = 1/8."""
    rows = dict(_MU2_COMMON)
    rows["bc"] = {"b": F(1, 8), "bc": F(1, 8), "c": F(1, 2), "": F(1, 4)}
    return _attention(rows)


MU2_PREFERENCE = PreferenceRelation.from_ranking("cba")
