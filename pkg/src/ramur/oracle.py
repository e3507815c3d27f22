"""Brute-force verifiers for small ground sets.

Nothing here calls the identification pipelines, so the results can be
compared against them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .axioms import THEOREM1, THEOREM2, check_all
from .core import DEFAULT, PreferenceRelation, RamUrError, StochasticChoiceFunction, subsets
from .forward import evaluate, random_model

MAX_ORACLE_SIZE = 6


class TooLarge(RamUrError, ValueError):
    pass


def _equal_split_reproduces(scf: StochasticChoiceFunction, E: frozenset, ranking: tuple[str, ...]) -> bool:
    """Spread p(x, A) evenly over every admissible consideration set topped by x and
    test that the result is a full-support attention function giving back scf."""
    pos = {x: i for i, x in enumerate(ranking)}
    for A in scf.menus():
        admissible = [D for D in subsets(A) if A & E <= D]
        by_top: dict[str, list[frozenset]] = {}
        for D in admissible:
            top = min(D, key=pos.__getitem__) if D else DEFAULT
            by_top.setdefault(top, []).append(D)
        total = Fraction(0)
        for top, sets in by_top.items():
            share = scf.p(top, A) / len(sets)
            if share <= 0:
                return False
            total += share * len(sets)
        # options topping no admissible set must never be chosen
        for x in list(A) + [DEFAULT]:
            if x not in by_top and scf.p(x, A) != 0:
                return False
        if total != 1:
            return False
    return True


def compatible_orders(scf: StochasticChoiceFunction, max_size: int = MAX_ORACLE_SIZE) -> list[tuple[frozenset, PreferenceRelation]]:
    """Every (references, total order) pair for which the equal-split construction represents scf."""
    if len(scf.ground_set) > max_size:
        raise TooLarge(f"{len(scf.ground_set)} alternatives exceeds oracle cap {max_size}")
    E = frozenset(x for x in scf.ground_set if scf.p(x, {x}) == 1)
    out = []
    for perm in itertools.permutations(scf.ground_set):
        if _equal_split_reproduces(scf, E, perm):
            out.append((E, PreferenceRelation.from_ranking(perm)))
    return out


@dataclass
class NecessityReport:
    kind: str
    size: int
    trials: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def exhaustive_necessity(kind: str, size: int, trials: int, seed: int = 0,
                         max_size: int = MAX_ORACLE_SIZE) -> NecessityReport:
    """Generate ``trials`` random models, evaluate them, and run the matching axiom suite on each."""
    if size > max_size:
        raise TooLarge(f"size {size} exceeds oracle cap {max_size}")
    axioms = THEOREM1 if kind == "ramur" else THEOREM2
    rep = NecessityReport(kind, size, trials)
    for i in range(trials):
        model_seed = seed + i
        scf = evaluate(random_model(kind, size, model_seed))
        failed = [name for name, r in check_all(scf, axioms).items() if not r.passed]
        if failed:
            rep.failures.append({"seed": model_seed, "axioms": failed})
    return rep
