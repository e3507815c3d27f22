"""Unique recovery of (references, preference, gamma) from RAM-UR-IRA data.

The preference is read off binary and singleton menus: between non-references
through the drop in choice probability when the other one is added, and
around references through certain choice. The resulting model is then checked
against the closed form on every menu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .axioms import THEOREM2, check_all
from .core import PreferenceRelation, RamUrError, RamUrIraModel, StochasticChoiceFunction
from .forward import eval_ira
from .identify_ramur import AxiomFailure, check_reproduces


class InconsistentReferences(RamUrError):
    pass


class IncoherentElicitation(RamUrError):
    pass


@dataclass(frozen=True)
class IraIdentification:
    references: frozenset
    gamma: dict
    preference: PreferenceRelation

    @property
    def model(self) -> RamUrIraModel:
        return RamUrIraModel(self.preference, self.gamma)


def reveal_references_ira(scf: StochasticChoiceFunction) -> frozenset:
    """Alternatives chosen for sure from some menu, cross-checked against the singleton reading."""
    ever_certain = frozenset(x for A in scf.menus() for x in A if scf.p(x, A) == 1)
    singleton = frozenset(x for x in scf.ground_set if scf.p(x, {x}) == 1)
    if ever_certain != singleton:
        raise InconsistentReferences(
            f"certain somewhere: {sorted(ever_certain)}, certain alone: {sorted(singleton)}"
        )
    return singleton


def gamma_from_singletons(scf: StochasticChoiceFunction) -> dict[str, Fraction]:
    return {x: scf.p(x, {x}) for x in scf.ground_set}


def prefs_nonref(scf: StochasticChoiceFunction, refs: Iterable[str]) -> PreferenceRelation:
    E = frozenset(refs)
    rest = [x for x in scf.ground_set if x not in E]
    pairs = set()
    for i, a in enumerate(rest):
        for b in rest[i + 1:]:
            verdicts = set()
            # a keeps its singleton probability next to b  -> a is better
            # a loses probability next to b                -> b is better
            for u, v in ((a, b), (b, a)):
                alone, paired = scf.p(u, {u}), scf.p(u, {u, v})
                if paired == alone:
                    verdicts.add((u, v))
                elif paired < alone:
                    verdicts.add((v, u))
                else:
                    raise IncoherentElicitation(f"p({u},{{{u},{v}}}) exceeds p({u},{{{u}}})")
            if len(verdicts) != 1:
                raise IncoherentElicitation(f"{a} and {b} are not ranked consistently")
            pairs |= verdicts
    try:
        return PreferenceRelation(tuple(rest), frozenset(pairs))
    except ValueError as exc:
        raise IncoherentElicitation(str(exc)) from None


def prefs_ref(scf: StochasticChoiceFunction, refs: Iterable[str]) -> set[tuple[str, str]]:
    """Pairs touching a reference: a reference beats exactly the options it is chosen over for sure."""
    E = frozenset(refs)
    pairs = set()
    for a in sorted(E):
        for b in scf.ground_set:
            if b == a:
                continue
            pairs.add((a, b) if scf.p(a, {a, b}) == 1 else (b, a))
    for x, y in pairs:
        if (y, x) in pairs:
            raise IncoherentElicitation(f"references {x} and {y} each rank above the other")
    return pairs


def identify_ira(scf: StochasticChoiceFunction) -> IraIdentification:
    reports = check_all(scf, THEOREM2)
    if not all(r.passed for r in reports.values()):
        raise AxiomFailure(reports)
    E = reveal_references_ira(scf)
    gamma = gamma_from_singletons(scf)
    pairs = set(prefs_nonref(scf, E).pairs)
    if E:
        pairs |= prefs_ref(scf, E)
    try:
        pref = PreferenceRelation(scf.ground_set, frozenset(pairs))
    except ValueError as exc:
        raise IncoherentElicitation(f"combined relation is not a strict order: {exc}") from None
    if not pref.is_total:
        raise IncoherentElicitation("combined relation is not complete")
    ident = IraIdentification(E, gamma, pref)
    check_reproduces(scf, eval_ira(ident.model))
    return ident


def represent_ira(scf: StochasticChoiceFunction) -> RamUrIraModel:
    return identify_ira(scf).model
