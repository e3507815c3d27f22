import itertools
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from ramur.axioms import check_reg
from ramur.core import DEFAULT, AttentionFunction, PreferenceRelation, RamUrIraModel, RamUrModel, menus_of, subsets
from ramur.fixtures import MU2_PREFERENCE, mu2
from ramur.forward import (
    InvalidAttention,
    check_attention,
    eval_ira,
    eval_ram,
    eval_ramur,
    ira_attention,
    random_model,
    sample_choices,
)
from ramur.identify_ramur import represent_ramur

from strategies import ira_models


def uniform_attention(ground):
    return AttentionFunction(frozenset(), {A: {D: F(1, 2 ** len(A)) for D in subsets(A)} for A in menus_of(ground)})


def test_eval_ram_uniform_two_alternatives():
    # subsets of {x,y}: {} -> default, {x} -> x, {y} -> y, {x,y} -> x
    scf = eval_ram(uniform_attention("xy"), PreferenceRelation.from_ranking("xy"))
    assert scf.row("xy") == {"x": F(1, 2), "y": F(1, 4), DEFAULT: F(1, 4)}


def test_eval_ram_concentrated_on_full_menu():
    eps = F(1, 1000)
    table = {A: {D: F(1, 2 ** len(A)) for D in subsets(A)} for A in menus_of("xy")}
    table[frozenset("xy")] = {frozenset(): eps, frozenset("x"): eps, frozenset("y"): eps, frozenset("xy"): 1 - 3 * eps}
    scf = eval_ram(AttentionFunction(frozenset(), table), PreferenceRelation.from_ranking("xy"))
    assert scf.p("x", "xy") == 1 - 2 * eps


def test_eval_ram_singleton():
    att = uniform_attention("xy")
    scf = eval_ram(att, PreferenceRelation.from_ranking("yx"))
    assert scf.p("x", "x") == att.mu("x", "x") == F(1, 2)


def test_eval_ram_rejects_reference_attention():
    with pytest.raises(InvalidAttention):
        eval_ram(mu2(), MU2_PREFERENCE)


def test_mu2_reproduces_example1(ex1):
    scf = eval_ramur(RamUrModel(frozenset("a"), MU2_PREFERENCE, mu2()))
    assert scf == ex1
    assert scf.p("b", "abc") == mu2().mu("ab", "abc") == F(1, 2)


def test_equal_split_reproduces_example1(ex1):
    model = represent_ramur(ex1)
    assert model.preference.ranking() == ["b", "c", "a"]
    assert eval_ramur(model) == ex1


def test_all_references_is_rational_choice():
    rank = PreferenceRelation.from_ranking("cabd")
    table = {A: {A: F(1)} for A in menus_of("abcd")}
    scf = eval_ramur(RamUrModel(frozenset("abcd"), rank, AttentionFunction(frozenset("abcd"), table)))
    for A in scf.menus():
        best = next(x for x in "cabd" if x in A)
        assert scf.p(best, A) == 1


def test_invalid_attention_raises():
    bad = AttentionFunction(frozenset("a"), {A: {A: F(1, 2)} for A in menus_of("a")})
    with pytest.raises(InvalidAttention):
        eval_ramur(RamUrModel(frozenset("a"), PreferenceRelation.from_ranking("a"), bad))


# --- attention diagnostics ---------------------------------------------------


def test_check_attention_mu2():
    diag = check_attention(mu2())
    assert diag.valid and diag.monotonic


def test_check_attention_full_support_violation():
    table = {A: {D: F(1, 2 ** len(A)) for D in subsets(A)} for A in menus_of("ab")}
    diag = check_attention(AttentionFunction(frozenset("a"), table))
    assert diag.sum_to_one and not diag.full_support and not diag.valid


def test_check_attention_equal_split(ex1):
    diag = check_attention(represent_ramur(ex1).attention)
    assert diag.valid
    assert diag.monotonic is True


def test_check_attention_monotonicity_is_separate():
    # valid, but mu({b},{b}) < mu({b},{a,b})
    table = {
        frozenset("a"): {frozenset(): F(1, 2), frozenset("a"): F(1, 2)},
        frozenset("b"): {frozenset(): F(9, 10), frozenset("b"): F(1, 10)},
        frozenset("ab"): {D: F(1, 4) for D in subsets("ab")},
    }
    diag = check_attention(AttentionFunction(frozenset(), table))
    assert diag.valid and not diag.monotonic


# --- closed form and product-form attention ---------------------------------


def test_eval_ira_direct_substitution():
    m = RamUrIraModel(PreferenceRelation.from_ranking("ba"), {"a": F(1), "b": F(1, 2)})
    assert eval_ira(m).row("ab") == {"a": F(1, 2), "b": F(1, 2), DEFAULT: F(0)}


def test_eval_ira_all_sure():
    m = RamUrIraModel(PreferenceRelation.from_ranking("cab"), {x: F(1) for x in "abc"})
    scf = eval_ira(m)
    for A in scf.menus():
        assert scf.p(next(x for x in "cab" if x in A), A) == 1


GAMMAS = [F(1), F(1, 2), F(1, 3), F(3, 4), F(63, 64)]


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_product_form_equivalence_exhaustive(size):
    ids = "abcd"[:size]
    for perm in itertools.permutations(ids):
        for gs in itertools.product(GAMMAS[:3], repeat=size):
            m = RamUrIraModel(PreferenceRelation.from_ranking(perm), dict(zip(ids, gs)))
            assert eval_ramur(RamUrModel(m.reference_set, m.preference, ira_attention(m))) == eval_ira(m)


def test_product_form_equivalence_size5():
    ids = "abcde"
    for perm in itertools.permutations(ids):
        m = RamUrIraModel(PreferenceRelation.from_ranking(perm), dict(zip(ids, GAMMAS)))
        assert eval_ramur(RamUrModel(m.reference_set, m.preference, ira_attention(m))) == eval_ira(m)


@settings(max_examples=60)
@given(ira_models())
def test_ira_is_regular(model):
    assert check_reg(eval_ira(model)).passed


def test_ramur_need_not_be_regular(ex1):
    assert not check_reg(eval_ramur(RamUrModel(frozenset("a"), MU2_PREFERENCE, mu2()))).passed


@pytest.mark.parametrize("seed", range(30))
def test_reference_dominance(seed):
    m = random_model("ramur", 1 + seed % 6, seed)
    scf = eval_ramur(m)
    rank = m.preference.rank_index()
    for A in scf.menus():
        for e in A & m.reference_set:
            for x in A:
                if rank[e] < rank[x]:
                    assert scf.p(x, A) == 0
        if A & m.reference_set:
            assert scf.default(A) == 0


# --- random models -----------------------------------------------------------


def test_random_model_reproducible():
    a, b = random_model("ira", 3, 11), random_model("ira", 3, 11)
    assert a == b
    assert all(0 < g <= 1 and (g * 64).denominator == 1 for g in a.gamma.values())
    assert a.reference_set == {x for x, g in a.gamma.items() if g == 1}


def test_random_ramur_empty_references_full_support():
    m = random_model("ramur", 3, 5, references=())
    for A in menus_of(m.ground):
        assert set(m.attention.table[A]) == set(subsets(A))


def test_random_models_pass_check_attention():
    for seed in range(200):
        m = random_model("ramur", 1 + seed % 5, seed)
        assert check_attention(m.attention, m.reference_set, m.ground).valid


def test_random_model_reference_sizes_cover_extremes():
    sizes = {len(random_model("ira", 3, s).reference_set) for s in range(60)}
    assert sizes == {0, 1, 2, 3}


def test_random_model_bounds():
    with pytest.raises(ValueError):
        random_model("ira", 0, 1)
    with pytest.raises(ValueError):
        random_model("rum", 2, 1)


# --- sampling ----------------------------------------------------------------


def _max_dev(run, scf):
    return max(abs(float(run.frequencies[A][x] - scf.p(x, A))) for A in scf.menus() for x in scf.row(A))


def test_sampling_close_to_exact_ira():
    m = RamUrIraModel(PreferenceRelation.from_ranking("xywz"), {"w": F(1), "x": F(1, 2), "y": F(1, 3), "z": F(3, 4)})
    run = sample_choices(m, seed=3, draws_per_menu=100_000)
    assert _max_dev(run, eval_ira(m)) <= 0.01


def test_sampling_close_to_exact_ramur():
    m = random_model("ramur", 4, 21)
    run = sample_choices(m, seed=4, draws_per_menu=100_000)
    assert _max_dev(run, eval_ramur(m)) <= 0.01


def test_single_draw_is_one_hot():
    run = sample_choices(random_model("ira", 3, 2), seed=1, draws_per_menu=1)
    for row in run.frequencies.values():
        assert sorted(row.values()) == [0] * (len(row) - 1) + [1]


def test_sampling_deterministic_per_seed():
    m = random_model("ramur", 3, 8)
    a = sample_choices(m, 99, 500)
    assert a.frequencies == sample_choices(m, 99, 500).frequencies
    assert a.frequencies != sample_choices(m, 100, 500).frequencies


def test_sample_frequencies_sum_to_one():
    run = sample_choices(random_model("ira", 4, 6), 0, 777)
    for row in run.frequencies.values():
        assert sum(row.values()) == 1
    assert run.to_scf().ground_set == ("a", "b", "c", "d")
