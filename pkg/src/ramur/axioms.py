"""Axiom checkers for complete stochastic choice data.

Each checker returns an :class:`AxiomReport` whose witnesses are sorted so
that the first one is minimal (smallest menus first, then lexicographic).

All comparisons go through :class:`Tolerance`. With ``eps == 0`` (the default)
they are exact. With ``eps > 0`` every equality ``e1 == e2`` becomes
``|e1 - e2| <= eps``; ratio equalities are cross-multiplied first, so
``n1/d1 == n2/d2`` is tested as ``|n1*d2 - n2*d1| <= eps`` and ``n/d == 1`` as
``|n - d| <= eps``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import (
    DEFAULT,
    StochasticChoiceFunction,
    alt_key,
    fmt_menu,
    fmt_prob,
    menu_key,
)

THEOREM1 = ("EDA", "C-WARP", "EXP")
THEOREM2 = ("R-ASYM", "R-IND", "NT", "EDA*", "REG")


@dataclass(frozen=True)
class Tolerance:
    eps: Fraction = Fraction(0)

    def zero(self, p) -> bool:
        return p <= self.eps

    def positive(self, p) -> bool:
        return p > self.eps

    def one(self, p) -> bool:
        return p >= 1 - self.eps

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.eps

    def ge(self, a, b) -> bool:
        return a >= b - self.eps

    def ratio_is_one(self, num, den) -> bool:
        return abs(num - den) <= self.eps

    def ratios_equal(self, n1, d1, n2, d2) -> bool:
        return abs(n1 * d2 - n2 * d1) <= self.eps


def _tol(eps) -> Tolerance:
    return Tolerance(Fraction(eps))


@dataclass
class AxiomReport:
    axiom: str
    passed: bool
    witnesses: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "passed": self.passed, "witnesses": [_jsonable(w) for w in self.witnesses]}

    def summary(self, limit: int = 3) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.axiom:7s} {status}"
        if self.witnesses:
            shown = "; ".join(describe_witness(w) for w in self.witnesses[:limit])
            more = f" (+{len(self.witnesses) - limit} more)" if len(self.witnesses) > limit else ""
            line += f"  {shown}{more}"
        return line


def _jsonable(v):
    if isinstance(v, frozenset):
        return sorted(v)
    if isinstance(v, Fraction):
        return fmt_prob(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def describe_witness(w: dict) -> str:
    parts = []
    for k, v in w.items():
        if isinstance(v, frozenset):
            v = fmt_menu(v)
        elif isinstance(v, Fraction):
            v = fmt_prob(v)
        parts.append(f"{k}={v}")
    return ", ".join(parts)


def _wkey(w: dict) -> tuple:
    key = []
    for v in w.values():
        if isinstance(v, frozenset):
            key.append((0, menu_key(v)))
        elif isinstance(v, str):
            key.append((1, alt_key(v)))
        else:
            key.append((2, v))
    return tuple(key)


def _report(name: str, witnesses: list[dict]) -> AxiomReport:
    witnesses.sort(key=_wkey)
    return AxiomReport(name, not witnesses, witnesses)


def _with_default(A) -> list[str]:
    return sorted(A) + [DEFAULT]


# ---------------------------------------------------------------------------
# RAM-UR axioms


def check_eda(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Every never-chosen option in A* is beaten for sure, in a binary menu, by some y in A."""
    t = _tol(eps)
    w = []
    for A in scf.menus():
        for x in _with_default(A):
            if not t.zero(scf.p(x, A)):
                continue
            others = [y for y in sorted(A) if y != x]
            if not any(t.one(scf.p(y, _pair(x, y))) for y in others):
                w.append({"A": A, "x": x})
    return _report("EDA", w)


def _pair(x: str, y: str) -> frozenset:
    # {x, y} with the default dropped: {a*, y} as a menu is the singleton {y}
    return frozenset(v for v in (x, y) if v != DEFAULT)


def check_cwarp(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Once y is chosen for sure alongside x, x is never chosen alongside y."""
    t = _tol(eps)
    menus = scf.menus()
    w = []
    for y in scf.ground_set:
        certain = [A for A in menus if y in A and t.one(scf.p(y, A))]
        if not certain:
            continue
        for x in list(scf.ground_set) + [DEFAULT]:
            if x == y:
                continue
            trigger = next((A for A in certain if x == DEFAULT or x in A), None)
            if trigger is None:
                continue
            for B in menus:
                if y in B and (x == DEFAULT or x in B) and not t.zero(scf.p(x, B)):
                    w.append({"y": y, "A": trigger, "x": x, "B": B, "pxB": scf.p(x, B)})
    return _report("C-WARP", w)


def check_exp(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Two certain choices x in A and y in B leave one of them certain in A | B."""
    t = _tol(eps)
    certain = []
    for A in scf.menus():
        for x in sorted(A):
            if t.one(scf.p(x, A)):
                certain.append((A, x))
    w = []
    for i, (A, x) in enumerate(certain):
        for B, y in certain[i + 1:]:
            U = A | B
            if not (t.one(scf.p(x, U)) or t.one(scf.p(y, U))):
                w.append({"A": A, "x": x, "B": B, "y": y})
    return _report("EXP", w)


# ---------------------------------------------------------------------------
# RAM-UR-IRA axioms


def check_rasym(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    t = _tol(eps)
    w = []
    for A in scf.menus():
        alts = [x for x in sorted(A) if t.positive(scf.p(x, A))]
        for i, a in enumerate(alts):
            for b in alts[i + 1:]:
                na, da = scf.p(a, A - {b}), scf.p(a, A)
                nb, db = scf.p(b, A - {a}), scf.p(b, A)
                if not t.ratio_is_one(na, da) and not t.ratio_is_one(nb, db):
                    w.append({"A": A, "a": a, "b": b, "ratio_a": na / da, "ratio_b": nb / db})
    return _report("R-ASYM", w)


def check_rind(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Ratio effect of removing b is the same in every menu (part 1: real a, part 2: default)."""
    t = _tol(eps)
    menus = scf.menus()
    w = []
    targets = list(scf.ground_set) + [DEFAULT]
    for a in targets:
        for b in scf.ground_set:
            if a == b:
                continue
            pool = []
            for A in menus:
                if b in A and (a == DEFAULT or a in A):
                    den = scf.p(a, A)
                    if t.positive(den):
                        pool.append((A, scf.p(a, A - {b}), den))
            w.extend(_ratio_mismatches(pool, a, b, t))
    return _report("R-IND", w)


def _ratio_mismatches(pool, a, b, t: Tolerance) -> list[dict]:
    out = []
    if t.eps == 0:
        # exact: group by ratio value, report each deviant against the first menu
        if not pool:
            return out
        A0, n0, d0 = pool[0]
        r0 = n0 / d0
        for A, n, d in pool[1:]:
            if n / d != r0:
                out.append({"a": a, "b": b, "A": A0, "B": A, "ratio_A": r0, "ratio_B": n / d})
        return out
    for i, (A, n1, d1) in enumerate(pool):
        for B, n2, d2 in pool[i + 1:]:
            if not t.ratios_equal(n1, d1, n2, d2):
                out.append({"a": a, "b": b, "A": A, "B": B, "ratio_A": n1 / d1, "ratio_B": n2 / d2})
    return out


def check_nt(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    t = _tol(eps)
    w = [{"x": x, "p": scf.p(x, {x})} for x in scf.ground_set if not t.positive(scf.p(x, {x}))]
    return _report("NT", w)


def check_eda_star(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    t = _tol(eps)
    w = []
    for A in scf.menus():
        if t.zero(scf.default(A)) and not any(t.zero(scf.default({x})) for x in A):
            w.append({"A": A})
    return _report("EDA*", w)


def check_reg(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Choice probability of every option in A* weakly falls when A grows."""
    t = _tol(eps)
    menus = scf.menus()
    w = []
    for B in menus:
        for A in menus:
            if len(A) >= len(B) or not A < B:
                continue
            for a in _with_default(A):
                pA, pB = scf.p(a, A), scf.p(a, B)
                if not t.ge(pA, pB):
                    w.append({"alt": a, "A": A, "B": B, "pA": pA, "pB": pB})
    w.sort(key=lambda d: (menu_key(d["A"]), menu_key(d["B"]), alt_key(d["alt"])))
    return AxiomReport("REG", not w, w)


def check_riia(scf: StochasticChoiceFunction, eps=0) -> AxiomReport:
    """Dropping a never-chosen alternative leaves every other choice probability unchanged."""
    t = _tol(eps)
    w = []
    for A in scf.menus():
        if len(A) < 2:
            continue
        for a in sorted(A):
            if not t.zero(scf.p(a, A)):
                continue
            rest = A - {a}
            for b in sorted(rest):
                if not t.eq(scf.p(b, rest), scf.p(b, A)):
                    w.append({"A": A, "a": a, "b": b, "pb_without_a": scf.p(b, rest), "pb": scf.p(b, A)})
    return _report("RIIA", w)


CHECKERS: dict[str, Callable[..., AxiomReport]] = {
    "EDA": check_eda,
    "C-WARP": check_cwarp,
    "EXP": check_exp,
    "R-ASYM": check_rasym,
    "R-IND": check_rind,
    "NT": check_nt,
    "EDA*": check_eda_star,
    "REG": check_reg,
    "RIIA": check_riia,
}


def check_all(scf: StochasticChoiceFunction, axioms=THEOREM1 + THEOREM2, eps=0) -> dict[str, AxiomReport]:
    return {name: CHECKERS[name](scf, eps) for name in axioms}


def verify_witness(axiom: str, scf: StochasticChoiceFunction, w: dict, eps=0) -> bool:
    """Re-check one witness in isolation; True when it is a genuine violation."""
    t = _tol(eps)
    p = scf.p
    if axiom == "EDA":
        A, x = w["A"], w["x"]
        return t.zero(p(x, A)) and not any(t.one(p(y, _pair(x, y))) for y in A if y != x)
    if axiom == "C-WARP":
        x, y, A, B = w["x"], w["y"], w["A"], w["B"]
        both = lambda M: y in M and (x == DEFAULT or x in M)
        return x != y and both(A) and both(B) and t.one(p(y, A)) and not t.zero(p(x, B))
    if axiom == "EXP":
        A, x, B, y = w["A"], w["x"], w["B"], w["y"]
        U = A | B
        return t.one(p(x, A)) and t.one(p(y, B)) and not (t.one(p(x, U)) or t.one(p(y, U)))
    if axiom == "R-ASYM":
        A, a, b = w["A"], w["a"], w["b"]
        if not (t.positive(p(a, A)) and t.positive(p(b, A))):
            return False
        return not t.ratio_is_one(p(a, A - {b}), p(a, A)) and not t.ratio_is_one(p(b, A - {a}), p(b, A))
    if axiom == "R-IND":
        a, b, A, B = w["a"], w["b"], w["A"], w["B"]
        if not (t.positive(p(a, A)) and t.positive(p(a, B))):
            return False
        return not t.ratios_equal(p(a, A - {b}), p(a, A), p(a, B - {b}), p(a, B))
    if axiom == "NT":
        return not t.positive(p(w["x"], {w["x"]}))
    if axiom == "EDA*":
        A = w["A"]
        return t.zero(scf.default(A)) and not any(t.zero(scf.default({x})) for x in A)
    if axiom == "REG":
        return w["A"] < w["B"] and not t.ge(p(w["alt"], w["A"]), p(w["alt"], w["B"]))
    if axiom == "RIIA":
        A, a, b = w["A"], w["a"], w["b"]
        return t.zero(p(a, A)) and not t.eq(p(b, A - {a}), p(b, A))
    raise KeyError(axiom)
