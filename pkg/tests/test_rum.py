from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from ramur.core import DEFAULT, PreferenceRelation, RamUrIraModel, menus_of
from ramur.forward import eval_ira, random_model
from ramur.rum import RumModel, build_rum, eval_rum, verify_rum_restrictions

from strategies import ira_models


@pytest.fixture
def two_alt():
    return RamUrIraModel(PreferenceRelation.from_ranking("ba"), {"a": F(1), "b": F(1, 2)})


def test_two_alternative_rum(two_alt):
    # considered sets {a} (weight 1 * 1/2) and {a,b} (weight 1 * 1/2)
    rum = build_rum(two_alt)
    assert rum.weights == {("b", "a", DEFAULT): F(1, 2), ("a", DEFAULT, "b"): F(1, 2)}


def test_eval_two_alternative_rum(two_alt):
    rum = build_rum(two_alt)
    assert eval_rum(rum, "ab") == {"a": F(1, 2), "b": F(1, 2), DEFAULT: F(0)}
    assert eval_rum(rum, "b") == {"b": F(1, 2), DEFAULT: F(1, 2)}


def test_restrictions_two_alternative(two_alt):
    rum = build_rum(two_alt)
    rep = verify_rum_restrictions(rum, two_alt)
    assert rep.passed
    assert sum(w for r, w in rum.weights.items() if r.index(DEFAULT) < r.index("a")) == 0
    assert sum(w for r, w in rum.weights.items() if r.index("b") < r.index(DEFAULT)) == F(1, 2)


def test_rational_boundary_single_order():
    m = RamUrIraModel(PreferenceRelation.from_ranking("cab"), {x: F(1) for x in "abc"})
    rum = build_rum(m)
    assert rum.weights == {("c", "a", "b", DEFAULT): F(1)}
    assert verify_rum_restrictions(rum, m).passed


def test_no_references_one_order_per_subset():
    m = RamUrIraModel(PreferenceRelation.from_ranking("abcd"), {"a": F(1, 2), "b": F(1, 3), "c": F(1, 5), "d": F(7, 8)})
    rum = build_rum(m)
    assert len(rum.weights) == 2 ** 4
    rep = verify_rum_restrictions(rum, m)
    assert rep.passed and "default_never_beats_reference" not in rep.checks


def test_restrictions_detect_tampering(two_alt):
    rum = build_rum(two_alt)
    bad = RumModel({("b", "a", DEFAULT): F(1, 2), (DEFAULT, "a", "b"): F(1, 2)})
    rep = verify_rum_restrictions(bad, two_alt)
    assert not rep.passed
    assert not rep.checks["default_never_beats_reference"]
    assert verify_rum_restrictions(rum, two_alt).passed


@settings(max_examples=80, deadline=None)
@given(ira_models(max_size=5))
def test_rum_equivalence(model):
    rum = build_rum(model)
    scf = eval_ira(model)
    assert rum.total() == 1
    for A in menus_of(model.ground):
        assert eval_rum(rum, A) == scf.row(A)
    assert verify_rum_restrictions(rum, model).passed


@settings(max_examples=50, deadline=None)
@given(ira_models(max_size=4))
def test_rum_is_regular(model):
    rum = build_rum(model)
    for B in menus_of(model.ground):
        pB = eval_rum(rum, B)
        for A in menus_of(B):
            pA = eval_rum(rum, A)
            assert all(pA[x] >= pB[x] for x in pA)


@pytest.mark.parametrize("seed", range(15))
def test_support_shrinks_as_references_grow(seed):
    small = random_model("ira", 4, seed)
    ranking = small.preference.ranking()
    grown = dict(small.gamma)
    for x in ranking[seed % 4:]:
        grown[x] = F(1)
    big = RamUrIraModel(small.preference, grown)
    assert small.reference_set <= big.reference_set
    assert build_rum(big).support() <= build_rum(small).support()
