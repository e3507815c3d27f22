"""Forward evaluation of attention models, Monte Carlo sampling and random model generation."""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .core import (
    DEFAULT,
    AttentionFunction,
    PreferenceRelation,
    RamUrError,
    RamUrIraModel,
    RamUrModel,
    StochasticChoiceFunction,
    fmt_menu,
    menu_key,
    menus_of,
    subsets,
)

Model = Union[RamUrModel, RamUrIraModel]


class InvalidAttention(RamUrError, ValueError):
    pass


# ---------------------------------------------------------------------------
# attention diagnostics


@dataclass
class AttentionDiagnostic:
    sum_to_one: bool
    full_support: bool
    monotonic: bool
    issues: list[str]

    @property
    def valid(self) -> bool:
        """Reference-dependent attention function conditions; monotonicity is reported separately."""
        return self.sum_to_one and self.full_support


def check_attention(attention: AttentionFunction, refs: Iterable[str] | None = None,
                    ground: Iterable[str] | None = None) -> AttentionDiagnostic:
    E = frozenset(attention.reference_set if refs is None else refs)
    if ground is None:
        ground = set().union(*attention.table) if attention.table else set()
    menus = menus_of(ground)
    issues: list[str] = []
    sums_ok = support_ok = mono_ok = True

    for A in menus:
        row = attention.table.get(A)
        if row is None:
            issues.append(f"menu {fmt_menu(A)} missing")
            sums_ok = support_ok = False
            continue
        for D, m in row.items():
            if m < 0 or not D <= A:
                issues.append(f"mu({fmt_menu(D)},{fmt_menu(A)})={m} outside the menu or negative")
                support_ok = False
        total = sum(row.values(), Fraction(0))
        if total != 1:
            issues.append(f"masses at {fmt_menu(A)} sum to {total}")
            sums_ok = False
        core = A & E
        for D in subsets(A):
            m = row.get(D, Fraction(0))
            eligible = core <= D
            if eligible and m <= 0:
                issues.append(f"mu({fmt_menu(D)},{fmt_menu(A)})=0 but the set keeps every reference")
                support_ok = False
            elif not eligible and m != 0:
                issues.append(f"mu({fmt_menu(D)},{fmt_menu(A)})={m} but the set drops a reference")
                support_ok = False

    # mu(T, S - {a}) >= mu(T, S) whenever a in S \ T
    for S in menus:
        if len(S) < 2 or S not in attention.table:
            continue
        for a in sorted(S):
            smaller = S - {a}
            if smaller not in attention.table:
                continue
            for T in subsets(smaller, nonempty=True):
                if attention.mu(T, smaller) < attention.mu(T, S):
                    mono_ok = False
                    issues.append(
                        f"not monotonic: mu({fmt_menu(T)},{fmt_menu(smaller)}) < mu({fmt_menu(T)},{fmt_menu(S)})"
                    )
    return AttentionDiagnostic(sums_ok, support_ok, mono_ok, issues)


# ---------------------------------------------------------------------------
# evaluation


def _evaluate(attention: AttentionFunction, order: PreferenceRelation) -> StochasticChoiceFunction:
    rank = order.rank_index()
    rows = {}
    for A in menus_of(order.ground):
        row = {x: Fraction(0) for x in A}
        for D, m in attention.table.get(A, {}).items():
            if D:
                row[min(D, key=rank.__getitem__)] += m
        rows[A] = row
    return StochasticChoiceFunction(order.ground, rows)


def _require_valid(attention: AttentionFunction, refs, ground):
    diag = check_attention(attention, refs, ground)
    if not diag.valid:
        raise InvalidAttention("; ".join(diag.issues[:5]))


def eval_ram(attention: AttentionFunction, order: PreferenceRelation) -> StochasticChoiceFunction:
    """Choice probabilities of a plain random attention model (every subset, the empty one included, has positive mass)."""
    if not order.is_total:
        raise ValueError("preference must be a strict total order")
    _require_valid(attention, frozenset(), order.ground)
    return _evaluate(attention, order)


def eval_ramur(model: RamUrModel) -> StochasticChoiceFunction:
    _require_valid(model.attention, model.reference_set, model.ground)
    return _evaluate(model.attention, model.preference)


def eval_ira(model: RamUrIraModel) -> StochasticChoiceFunction:
    """Closed form p(x, A) = gamma(x) * prod over better y in A of (1 - gamma(y))."""
    ranking = model.preference.ranking()
    g = model.gamma
    rows = {}
    for A in menus_of(model.ground):
        row = {}
        miss = Fraction(1)
        for x in ranking:
            if x in A:
                row[x] = g[x] * miss
                miss *= 1 - g[x]
        rows[A] = row
    return StochasticChoiceFunction(model.ground, rows)


def ira_attention(model: RamUrIraModel) -> AttentionFunction:
    """Product-form attention mu(D, A) = prod_{x in D} gamma(x) * prod_{y in A - D} (1 - gamma(y)).

    Zero-mass sets (those dropping a reference) are omitted.
    """
    g = model.gamma
    table = {}
    for A in menus_of(model.ground):
        row = {}
        for D in subsets(A):
            m = Fraction(1)
            for x in A:
                m *= g[x] if x in D else 1 - g[x]
            if m:
                row[D] = m
        table[A] = row
    return AttentionFunction(model.reference_set, table)


def evaluate(model: Model) -> StochasticChoiceFunction:
    if isinstance(model, RamUrIraModel):
        return eval_ira(model)
    return eval_ramur(model)


# ---------------------------------------------------------------------------
# sampling


@dataclass
class SampleRun:
    seed: int
    draws_per_menu: int
    frequencies: dict[frozenset, dict[str, Fraction]]

    def to_scf(self) -> StochasticChoiceFunction:
        ground = sorted(set().union(*self.frequencies))
        rows = {A: {x: f for x, f in row.items() if x != DEFAULT} for A, row in self.frequencies.items()}
        return StochasticChoiceFunction(tuple(ground), rows)


def menu_stream(seed: int, A: frozenset) -> np.random.Generator:
    """Independent PCG64 stream for one menu, derived from the run seed and a stable menu hash."""
    h = zlib.crc32(",".join(sorted(A)).encode())
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(h,))))


def sample_choices(model: Model, seed: int, draws_per_menu: int) -> SampleRun:
    if draws_per_menu < 1:
        raise ValueError("draws_per_menu must be >= 1")
    ranking = model.preference.ranking()
    freqs = {}
    for A in menus_of(model.ground):
        rng = menu_stream(seed, A)
        if isinstance(model, RamUrIraModel):
            counts = _sample_ira_menu(model, ranking, A, rng, draws_per_menu)
        else:
            counts = _sample_table_menu(model, ranking, A, rng, draws_per_menu)
        freqs[A] = {x: Fraction(c, draws_per_menu) for x, c in counts.items()}
    return SampleRun(seed, draws_per_menu, freqs)


def _sample_ira_menu(model, ranking, A, rng, draws, chunk=50_000):
    alts = [x for x in ranking if x in A]
    gam = np.array([float(model.gamma[x]) for x in alts])
    sure = np.array([model.gamma[x] == 1 for x in alts])
    tally = np.zeros(len(alts) + 1, dtype=np.int64)
    left = draws
    while left:
        n = min(chunk, left)
        seen = rng.random((n, len(alts))) < gam
        seen[:, sure] = True
        first = np.where(seen.any(axis=1), seen.argmax(axis=1), len(alts))
        tally += np.bincount(first, minlength=len(alts) + 1)
        left -= n
    out = {x: int(tally[i]) for i, x in enumerate(alts)}
    out[DEFAULT] = int(tally[-1])
    return out


def _sample_table_menu(model, ranking, A, rng, draws):
    rank = {x: i for i, x in enumerate(ranking)}
    items = sorted(model.attention.table[A].items(), key=lambda kv: menu_key(kv[0]))
    probs = np.array([float(m) for _, m in items])
    counts = rng.multinomial(draws, probs / probs.sum())
    out = {x: 0 for x in sorted(A)}
    out[DEFAULT] = 0
    for (D, _), c in zip(items, counts):
        out[min(D, key=rank.__getitem__) if D else DEFAULT] += int(c)
    return out


# ---------------------------------------------------------------------------
# random models


def _ids(size: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(size)]


def random_model(kind: str, size: int, seed: int, *, references: Iterable[str] | None = None,
                 ranking: Iterable[str] | None = None, max_weight: int = 8) -> Model:
    """Seeded random RAM-UR (``kind='ramur'``) or RAM-UR-IRA (``kind='ira'``) model on ids a, b, c, ...

    The reference set size is uniform on 0..size unless ``references`` is given,
    so empty and full reference sets both occur. Non-reference attention
    parameters are k/64 with k in 1..63; references get 1.
    """
    if not 1 <= size <= 10:
        raise ValueError("size must be between 1 and 10")
    if kind not in ("ramur", "ira"):
        raise ValueError(f"unknown kind {kind!r}")
    rng = np.random.default_rng(seed)
    ids = _ids(size)
    order = list(ranking) if ranking is not None else [ids[i] for i in rng.permutation(size)]
    if references is None:
        k = int(rng.integers(0, size + 1))
        E = frozenset(ids[i] for i in rng.choice(size, size=k, replace=False))
    else:
        E = frozenset(references)
    pref = PreferenceRelation.from_ranking(order)

    if kind == "ira":
        gamma = {x: Fraction(1) if x in E else Fraction(int(rng.integers(1, 64)), 64) for x in ids}
        return RamUrIraModel(pref, gamma)

    table = {}
    for A in menus_of(ids):
        core = A & E
        eligible = [D for D in subsets(A) if core <= D]
        w = rng.integers(1, max_weight + 1, size=len(eligible))
        total = int(w.sum())
        table[A] = {D: Fraction(int(wi), total) for D, wi in zip(eligible, w)}
    return RamUrModel(E, pref, AttentionFunction(E, table))
