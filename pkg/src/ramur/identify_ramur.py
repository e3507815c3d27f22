"""Recover references, the revealed partial order and a representing attention function from RAM-UR data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .axioms import THEOREM1, AxiomReport, check_all
from .core import (
    DEFAULT,
    AttentionFunction,
    CycleError,
    PreferenceRelation,
    RamUrError,
    RamUrModel,
    StochasticChoiceFunction,
    count_linear_extensions,
    first_linear_extension,
    fmt_menu,
    menus_of,
    transitive_closure,
)
from .forward import eval_ramur


class AxiomFailure(RamUrError):
    def __init__(self, reports: dict[str, AxiomReport]):
        self.reports = {k: r for k, r in reports.items() if not r.passed}
        super().__init__("axioms failed: " + ", ".join(self.reports))


class NotPartialOrder(RamUrError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("revealed relation has a cycle: " + " > ".join(cycle))


class ConstructionFailure(RamUrError):
    pass


class RepresentationMismatch(RamUrError):
    def __init__(self, x: str, A: frozenset, expected, got):
        self.x, self.A, self.expected, self.got = x, A, expected, got
        super().__init__(f"p({x},{fmt_menu(A)}): data {expected}, model {got}")


@dataclass(frozen=True, eq=False)
class RamUrIdentification:
    revealed_references: frozenset
    revealed_relation: PreferenceRelation
    default_pairs: frozenset
    extensions_count: int
    chosen_extension: PreferenceRelation
    model: RamUrModel


def reveal_references(scf: StochasticChoiceFunction) -> frozenset:
    """Alternatives chosen for sure when offered alone."""
    return frozenset(x for x in scf.ground_set if scf.p(x, {x}) == 1)


def build_P(scf: StochasticChoiceFunction, refs: Iterable[str]) -> tuple[PreferenceRelation, frozenset]:
    """Revealed relation on X, plus the recorded comparisons against the default.

    A reference x beats y when it is chosen for sure from {x, y}; a non-reference
    x beats a reference y when it is ever chosen from {x, y}; two non-references
    are linked through a reference between them. The result is transitively
    closed. Raises NotPartialOrder on a cycle.
    """
    E = frozenset(refs)
    X = scf.ground_set
    pairs = set()
    for x in sorted(E):
        for y in X:
            if y != x and scf.p(x, {x, y}) == 1:
                pairs.add((x, y))
    for x in X:
        if x in E:
            continue
        for y in sorted(E):
            if scf.p(x, {x, y}) > 0:
                pairs.add((x, y))
    for x in X:
        for y in X:
            if x != y and x not in E and y not in E:
                if any((x, z) in pairs and (z, y) in pairs for z in E):
                    pairs.add((x, y))
    default_pairs = frozenset((x, DEFAULT) for x in sorted(E) if scf.p(x, {x}) == 1)
    for x, y in pairs:
        if (y, x) in pairs:
            raise NotPartialOrder([x, y, x])
    try:
        return transitive_closure(pairs, X), default_pairs
    except CycleError as exc:
        raise NotPartialOrder(exc.cycle) from None


def build_attention(scf: StochasticChoiceFunction, refs: Iterable[str], order: PreferenceRelation) -> AttentionFunction:
    """Equal-split attention function.

    In each menu A the mass p(x, A) is spread evenly over every D with
    {x} | (A & refs) <= D <= A and x the best element of D; the empty set
    carries p(DEFAULT, A) when A holds no reference.
    """
    E = frozenset(refs)
    rank = order.rank_index()
    table = {}
    for A in menus_of(scf.ground_set):
        core = A & E
        row: dict[frozenset, Fraction] = {}
        for x in sorted(A):
            px = scf.p(x, A)
            if px == 0:
                continue
            below = frozenset(y for y in A if rank[y] > rank[x])
            base = core | {x}
            if not base <= below | {x}:
                raise ConstructionFailure(f"p({x},{fmt_menu(A)})={px} but a better reference is in the menu")
            free = sorted(below - base)
            share = px / (1 << len(free))
            for mask in range(1 << len(free)):
                D = base | {free[i] for i in range(len(free)) if mask >> i & 1}
                row[D] = share
        d = scf.default(A)
        if d:
            if core:
                raise ConstructionFailure(f"default has mass {d} at {fmt_menu(A)} although it holds a reference")
            row[frozenset()] = d
        table[A] = row
    return AttentionFunction(E, table)


def identify_ramur(scf: StochasticChoiceFunction) -> RamUrIdentification:
    reports = check_all(scf, THEOREM1)
    if not all(r.passed for r in reports.values()):
        raise AxiomFailure(reports)
    E = reveal_references(scf)
    # with no references P is empty, every order extends it, and the first
    # extension is the lexicographic order over ids
    P, default_pairs = build_P(scf, E)
    chosen = first_linear_extension(P)
    attention = build_attention(scf, E, chosen)
    model = RamUrModel(E, chosen, attention)
    check_reproduces(scf, eval_ramur(model))
    return RamUrIdentification(E, P, default_pairs, count_linear_extensions(P), chosen, model)


def represent_ramur(scf: StochasticChoiceFunction) -> RamUrModel:
    return identify_ramur(scf).model


def check_reproduces(data: StochasticChoiceFunction, fitted: StochasticChoiceFunction):
    diffs = data.differences(fitted)
    if diffs:
        x, A, expected, got = diffs[0]
        raise RepresentationMismatch(x, A, expected, got)
