import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramur.core import (
    DEFAULT,
    CycleError,
    GroundSetTooLarge,
    PreferenceRelation,
    ValidationError,
    count_linear_extensions,
    default_prob,
    first_linear_extension,
    linear_extensions,
    menus_of,
    transitive_closure,
    validate_scf,
)
from ramur.fixtures import EXAMPLE1_ROWS

from strategies import choice_functions


def test_example1_validates(ex1):
    assert ex1.ground_set == ("a", "b", "c")
    assert len(ex1.menus()) == 7
    assert ex1.p("b", {"a", "b"}) == F(1, 2)
    assert ex1.p("c", {"a", "b"}) == 0


def test_mass_exceeds_one():
    rows = {frozenset("a"): {"a": "3/2"}}
    with pytest.raises(ValidationError) as exc:
        validate_scf(rows, ["a"])
    assert "MassExceedsOne" in exc.value.kinds


def test_missing_menu():
    rows = {frozenset(m): p for m, p in EXAMPLE1_ROWS.items() if set(m) != {"b", "c"}}
    with pytest.raises(ValidationError) as exc:
        validate_scf(rows, "abc")
    assert exc.value.kinds == {"MissingMenu"}
    assert exc.value.issues[0].menu == frozenset("bc")


def test_reports_every_issue():
    rows = {frozenset("a"): {"a": "-1/2"}, frozenset("ab"): {"a": "1", "b": "1/2", "z": "0"}}
    with pytest.raises(ValidationError) as exc:
        validate_scf(rows, "ab")
    assert {"NegativeProbability", "MassExceedsOne", "UnknownAlternative", "MissingMenu"} <= exc.value.kinds


@pytest.mark.parametrize("bad", ["DEFAULT", "a b", "a/b", ""])
def test_reserved_and_malformed_ids(bad):
    with pytest.raises(ValidationError):
        validate_scf({frozenset([bad]): {}}, [bad])


def test_float_refused():
    with pytest.raises(ValidationError) as exc:
        validate_scf({frozenset("a"): {"a": 0.5}}, ["a"])
    assert "ParseError" in exc.value.kinds


@pytest.mark.parametrize("menu,expected", [("bc", F(1, 4)), ("ab", F(0)), ("", F(1)), ("b", F(1, 2))])
def test_default_prob(ex1, menu, expected):
    assert default_prob(ex1, set(menu)) == expected


@given(choice_functions())
def test_mass_sums_to_one_with_default(scf):
    for A in scf.menus():
        assert sum(scf.row(A).values()) == 1


# --- order relations ---------------------------------------------------------


def test_closure_chain():
    rel = transitive_closure({("b", "a"), ("a", "c")})
    assert rel.pairs == {("b", "a"), ("a", "c"), ("b", "c")}
    assert rel.is_total and rel.ranking() == ["b", "a", "c"]


def test_closure_empty():
    assert transitive_closure(set()).pairs == frozenset()


def test_closure_two_cycle():
    with pytest.raises(CycleError) as exc:
        transitive_closure({("a", "b"), ("b", "a")})
    assert exc.value.cycle[0] == exc.value.cycle[-1]


def test_closure_long_cycle_witness():
    with pytest.raises(CycleError) as exc:
        transitive_closure({("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")})
    cyc = exc.value.cycle
    assert set(cyc) == {"a", "b", "c"}
    assert all(p in {("a", "b"), ("b", "c"), ("c", "a")} for p in zip(cyc, cyc[1:]))


@st.composite
def dags(draw):
    n = draw(st.integers(1, 6))
    ids = "abcdef"[:n]
    hidden = draw(st.permutations(ids))
    pairs = {(hidden[i], hidden[j]) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())}
    return ids, pairs


@given(dags())
def test_closure_idempotent(dag):
    ids, pairs = dag
    once = transitive_closure(pairs, ids)
    assert transitive_closure(once.pairs, ids) == once


@given(dags())
def test_extensions_match_brute_force(dag):
    ids, pairs = dag
    partial = transitive_closure(pairs, ids)
    brute = []
    for perm in itertools.permutations(sorted(ids)):
        pos = {x: i for i, x in enumerate(perm)}
        if all(pos[x] < pos[y] for x, y in partial.pairs):
            brute.append(list(perm))
    got = linear_extensions(partial)
    assert [o.ranking() for o in got] == brute
    assert count_linear_extensions(partial) == len(brute)
    assert first_linear_extension(partial) == got[0]
    assert all(o.contains(partial) for o in got)


def test_extensions_example1():
    P = PreferenceRelation("abc", {("b", "a"), ("c", "a")})
    assert [o.ranking() for o in linear_extensions(P)] == [["b", "c", "a"], ["c", "b", "a"]]


def test_extensions_of_total_order():
    T = PreferenceRelation.from_ranking("cab")
    assert linear_extensions(T) == [T]


def test_extensions_of_empty_relation():
    assert [o.ranking() for o in linear_extensions(PreferenceRelation("xy", set()))] == [["x", "y"], ["y", "x"]]


def test_extension_cap():
    with pytest.raises(GroundSetTooLarge):
        linear_extensions(PreferenceRelation("abcdefghijk", set()))
    assert linear_extensions(PreferenceRelation("abc", set()), cap=3)
    # counting has no cap
    assert count_linear_extensions(PreferenceRelation("abcdefghijk", set())) == 39916800


@pytest.mark.parametrize("pairs", [{("a", "a")}, {("a", "b"), ("b", "a")}, {("a", "b"), ("b", "c")}])
def test_relation_rejects_non_orders(pairs):
    with pytest.raises(ValueError):
        PreferenceRelation("abc", pairs)


def test_menus_canonical_order():
    assert [sorted(m) for m in menus_of("ba")] == [["a"], ["b"], ["a", "b"]]
    assert DEFAULT not in "".join(sorted(menus_of("abc")[-1]))
