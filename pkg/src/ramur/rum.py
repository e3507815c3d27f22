"""Random utility representation of RAM-UR-IRA models."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import DEFAULT, DiagnosticReport, RamUrIraModel, subsets


@dataclass(frozen=True)
class RumModel:
    """Distribution over strict total orders of X plus DEFAULT.

    Each order is a best-first tuple of ids; ``weights`` holds only positive masses.
    """

    weights: dict

    @property
    def orders(self) -> list[tuple[str, ...]]:
        return sorted(self.weights)

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def support(self) -> set[tuple[str, ...]]:
        return set(self.weights)

    def __hash__(self):
        return hash(tuple(sorted(self.weights.items())))


def build_rum(model: RamUrIraModel) -> RumModel:
    """One order per considered set S: S above DEFAULT, the rest below, both blocks in preference order."""
    ranking = model.preference.ranking()
    g = model.gamma
    weights = {}
    for S in subsets(ranking):
        w = Fraction(1)
        for x in ranking:
            w *= g[x] if x in S else 1 - g[x]
        if w:
            rank = tuple(x for x in ranking if x in S) + (DEFAULT,) + tuple(x for x in ranking if x not in S)
            weights[rank] = w
    return RumModel(weights)


def eval_rum(rum: RumModel, A: Iterable[str]) -> dict[str, Fraction]:
    """Choice probabilities on A plus DEFAULT: mass of the orders whose top element of A* is x."""
    menu_star = set(A) | {DEFAULT}
    out = {x: Fraction(0) for x in sorted(A)}
    out[DEFAULT] = Fraction(0)
    for rank, w in rum.weights.items():
        top = next(x for x in rank if x in menu_star)
        out[top] += w
    return out


def _beats(rank: tuple, x: str, y: str) -> bool:
    return rank.index(x) < rank.index(y)


def verify_rum_restrictions(rum: RumModel, model: RamUrIraModel) -> DiagnosticReport:
    rep = DiagnosticReport("rum-restrictions")
    W = rum.weights
    E = model.reference_set
    pref = model.preference
    ground = model.ground

    mass = lambda pred: sum((w for r, w in W.items() if pred(r)), Fraction(0))

    rep.record("weights_sum_to_one", rum.total() == 1, f"weights sum to {rum.total()}")
    rep.record("weights_positive", all(w > 0 for w in W.values()), "non-positive weight in support")
    for r in W:
        ok = sorted(r) == sorted(list(ground) + [DEFAULT])
        rep.record("orders_complete", ok, f"order {r} does not rank X plus DEFAULT")

    for e in sorted(E):
        m = mass(lambda r: _beats(r, DEFAULT, e))
        rep.record("default_never_beats_reference", m == 0, f"DEFAULT above reference {e} with mass {m}")
    for e in sorted(E):
        for b in ground:
            if pref.prefers(e, b):
                m = mass(lambda r: _beats(r, b, e))
                rep.record("reference_dominance", m == 0, f"{b} above better reference {e} with mass {m}")
    for a in ground:
        m = mass(lambda r: _beats(r, a, DEFAULT))
        rep.record("marginals", m == model.gamma[a], f"mass of {a} above DEFAULT is {m}, gamma is {model.gamma[a]}")
    for a, b in itertools.combinations(ground, 2):
        m = mass(lambda r: _beats(r, a, DEFAULT) and _beats(r, b, DEFAULT))
        want = model.gamma[a] * model.gamma[b]
        rep.record("pairwise", m == want, f"joint mass of {a},{b} above DEFAULT is {m}, expected {want}")
    for a, b in itertools.permutations(ground, 2):
        if pref.prefers(a, b):
            m = mass(lambda r: _beats(r, b, a) and _beats(r, a, DEFAULT) and _beats(r, b, DEFAULT))
            rep.record("no_inversion_above_default", m == 0, f"{b} above better {a}, both above DEFAULT, mass {m}")
    return rep
