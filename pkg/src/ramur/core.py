"""Ground types: menus, exact probabilities, order relations and choice data.

Every probability is a :class:`fractions.Fraction`; nothing in the model layer
touches floating point. Menus are ``frozenset`` objects of string ids and the
default (abstention) option is the reserved id :data:`DEFAULT`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

DEFAULT = "DEFAULT"

Menu = frozenset
Probability = Fraction
ProbLike = Union[Fraction, int, str]

_ID_RE = re.compile(r"^[^\s/]+$")


class RamUrError(Exception):
    """Base class for all errors raised by this package."""


@dataclass(frozen=True)
class Issue:
    kind: str
    alt: str | None = None
    menu: frozenset | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = []
        if self.alt is not None:
            where.append(f"alt={self.alt}")
        if self.menu is not None:
            where.append(f"menu={fmt_menu(self.menu)}")
        loc = f" ({', '.join(where)})" if where else ""
        return f"{self.kind}{loc}: {self.detail}" if self.detail else f"{self.kind}{loc}"


class ValidationError(RamUrError, ValueError):
    """Raised when raw choice data fails validation; carries every issue found."""

    def __init__(self, issues: list[Issue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues[:10]))

    @property
    def kinds(self) -> set[str]:
        return {i.kind for i in self.issues}


class CycleError(RamUrError, ValueError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("cycle: " + " > ".join(cycle))


class GroundSetTooLarge(RamUrError, ValueError):
    pass


# ---------------------------------------------------------------------------
# menus and subsets


def menu(*ids: str) -> frozenset:
    return frozenset(ids)


def menu_key(m: Iterable[str]) -> tuple:
    """Canonical sort key: cardinality first, then the sorted id tuple."""
    s = sorted(m)
    return (len(s), tuple(s))


def fmt_menu(m: Iterable[str]) -> str:
    return "{" + ",".join(sorted(m)) + "}"


def subsets(items: Iterable[str], *, nonempty: bool = False) -> list[frozenset]:
    """All subsets of ``items`` in canonical order."""
    base = sorted(items)
    start = 1 if nonempty else 0
    out = []
    for k in range(start, len(base) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(base, k))
    return out


def menus_of(ground: Iterable[str]) -> list[frozenset]:
    """All nonempty menus of ``ground`` in canonical order."""
    return subsets(ground, nonempty=True)


def alt_key(x: str) -> tuple:
    # DEFAULT sorts after every real alternative
    return (x == DEFAULT, x)


def to_probability(value: ProbLike) -> Fraction:
    """Parse an exact rational. Floats are refused since they are not exact."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}; use a 'num/den' string")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def fmt_prob(p: Fraction) -> str:
    return str(Fraction(p))


# ---------------------------------------------------------------------------
# stochastic choice functions


@dataclass(frozen=True, eq=False)
class StochasticChoiceFunction:
    """Choice probabilities p(a, A) for every nonempty menu A of the ground set.

    ``rows`` maps each menu to the probabilities of its members. The default
    probability is derived, never stored; ``p(DEFAULT, empty) == 1``.
    Use :func:`validate_scf` to build one from untrusted data.
    """

    ground_set: tuple[str, ...]
    rows: Mapping[frozenset, Mapping[str, Fraction]]
    _defaults: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ground_set", tuple(sorted(self.ground_set)))
        defaults = {A: 1 - sum(row.values(), Fraction(0)) for A, row in self.rows.items()}
        object.__setattr__(self, "_defaults", defaults)

    def p(self, x: str, A: Iterable[str]) -> Fraction:
        A = frozenset(A)
        if not A:
            return Fraction(1) if x == DEFAULT else Fraction(0)
        if x == DEFAULT:
            return self._defaults[A]
        if x not in A:
            return Fraction(0)
        return self.rows[A].get(x, Fraction(0))

    def default(self, A: Iterable[str]) -> Fraction:
        return self.p(DEFAULT, A)

    def menus(self) -> list[frozenset]:
        return sorted(self.rows, key=menu_key)

    def row(self, A: Iterable[str], *, with_default: bool = True) -> dict[str, Fraction]:
        A = frozenset(A)
        out = {x: self.p(x, A) for x in sorted(A)}
        if with_default:
            out[DEFAULT] = self.default(A)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, StochasticChoiceFunction):
            return NotImplemented
        if self.ground_set != other.ground_set or set(self.rows) != set(other.rows):
            return False
        return all(self.row(A) == other.row(A) for A in self.rows)

    __hash__ = None

    def differences(self, other: "StochasticChoiceFunction") -> list[tuple[str, frozenset, Fraction, Fraction]]:
        """(x, A, mine, theirs) for every disagreement, defaults included."""
        out = []
        for A in sorted(set(self.rows) | set(other.rows), key=menu_key):
            for x in sorted(A) + [DEFAULT]:
                a = self.p(x, A) if A in self.rows else None
                b = other.p(x, A) if A in other.rows else None
                if a != b:
                    out.append((x, A, a, b))
        return out


def _normalize_raw(raw) -> list[tuple[frozenset, Mapping]]:
    if isinstance(raw, Mapping):
        items = list(raw.items())
    else:
        items = list(raw)
    return [(frozenset(m), probs) for m, probs in items]


def validate_scf(raw, ground_set: Iterable[str]) -> StochasticChoiceFunction:
    """Validate raw rows ``{menu: {alt: prob}}`` into a complete choice function.

    Members absent from a row are read as probability 0. All problems are
    collected and raised together as a :class:`ValidationError`.
    """
    ground = list(ground_set)
    issues: list[Issue] = []
    gset = set(ground)
    for x in ground:
        if not isinstance(x, str) or not _ID_RE.match(x) or x == DEFAULT:
            issues.append(Issue("InvalidAlternative", alt=str(x), detail="ids must be nonempty, without '/' or whitespace, and not DEFAULT"))
    if len(gset) != len(ground):
        issues.append(Issue("DuplicateAlternative", detail="ground set ids must be unique"))
    if not ground:
        issues.append(Issue("EmptyGroundSet"))

    rows: dict[frozenset, dict[str, Fraction]] = {}
    for A, probs in _normalize_raw(raw):
        if not A:
            issues.append(Issue("EmptyMenu", detail="menus must be nonempty"))
            continue
        stray = sorted(A - gset)
        if stray:
            issues.append(Issue("UnknownAlternative", menu=A, detail=f"menu members not in ground set: {stray}"))
            continue
        if A in rows:
            issues.append(Issue("DuplicateMenu", menu=A))
            continue
        row: dict[str, Fraction] = {x: Fraction(0) for x in A}
        for x, v in probs.items():
            if x not in A:
                kind = "UnknownAlternative" if x not in gset else "ProbabilityOutsideMenu"
                issues.append(Issue(kind, alt=x, menu=A, detail="probability given for an alternative not in the menu"))
                continue
            try:
                pv = to_probability(v)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                issues.append(Issue("ParseError", alt=x, menu=A, detail=str(exc)))
                continue
            if pv < 0:
                issues.append(Issue("NegativeProbability", alt=x, menu=A, detail=f"p={pv}"))
            row[x] = pv
        total = sum(row.values(), Fraction(0))
        if total > 1:
            issues.append(Issue("MassExceedsOne", menu=A, detail=f"sum={total}"))
        rows[A] = row

    if gset and not any(i.kind in ("InvalidAlternative", "DuplicateAlternative") for i in issues):
        for A in menus_of(gset):
            if A not in rows:
                issues.append(Issue("MissingMenu", menu=A))
    if issues:
        raise ValidationError(issues)
    return StochasticChoiceFunction(tuple(ground), rows)


def default_prob(scf: StochasticChoiceFunction, A: Iterable[str]) -> Fraction:
    return scf.default(A)


# ---------------------------------------------------------------------------
# order relations


@dataclass(frozen=True)
class PreferenceRelation:
    """Strict partial order on ``ground``; pairs ``(x, y)`` read "x is better than y"."""

    ground: tuple[str, ...]
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(sorted(self.ground)))
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        g = set(self.ground)
        for x, y in self.pairs:
            if x not in g or y not in g:
                raise ValueError(f"pair ({x}, {y}) outside ground set")
            if x == y:
                raise ValueError(f"reflexive pair ({x}, {x})")
            if (y, x) in self.pairs:
                raise ValueError(f"symmetric pairs ({x}, {y}) and ({y}, {x})")
        for x, y in self.pairs:
            for z in self.ground:
                if (y, z) in self.pairs and (x, z) not in self.pairs:
                    raise ValueError(f"not transitive: ({x},{y}), ({y},{z}) without ({x},{z})")

    @classmethod
    def from_ranking(cls, ranking: Iterable[str]) -> "PreferenceRelation":
        """Total order from a best-first list of ids."""
        r = list(ranking)
        if len(set(r)) != len(r):
            raise ValueError(f"ranking repeats ids: {r}")
        pairs = {(r[i], r[j]) for i in range(len(r)) for j in range(i + 1, len(r))}
        return cls(tuple(r), frozenset(pairs))

    @property
    def kind(self) -> str:
        n = len(self.ground)
        return "total" if len(self.pairs) == n * (n - 1) // 2 else "partial"

    @property
    def is_total(self) -> bool:
        return self.kind == "total"

    def prefers(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def ranking(self) -> list[str]:
        """Best-first list; only defined for total orders."""
        if not self.is_total:
            raise ValueError("ranking() needs a total order")
        wins = {x: 0 for x in self.ground}
        for x, _ in self.pairs:
            wins[x] += 1
        return sorted(self.ground, key=lambda x: -wins[x])

    def rank_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.ranking())}

    def contains(self, other: "PreferenceRelation") -> bool:
        return other.pairs <= self.pairs

    def restrict(self, keep: Iterable[str]) -> "PreferenceRelation":
        k = set(keep)
        return PreferenceRelation(tuple(k), frozenset((x, y) for x, y in self.pairs if x in k and y in k))

    def __str__(self) -> str:
        if self.is_total and self.ground:
            return ">".join(self.ranking())
        return "{" + ", ".join(f"{x}>{y}" for x, y in sorted(self.pairs)) + "}"


def _find_cycle(pairs: set, start: str) -> list[str]:
    succ: dict[str, list[str]] = {}
    for x, y in sorted(pairs):
        succ.setdefault(x, []).append(y)
    # BFS back to start for a shortest witness
    prev = {}
    frontier = [start]
    seen = set()
    while frontier:
        nxt = []
        for u in frontier:
            for v in succ.get(u, []):
                if v == start:
                    path = [u]
                    while path[-1] != start:
                        path.append(prev[path[-1]])
                    return list(reversed(path)) + [start]
                if v not in seen:
                    seen.add(v)
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    return [start, start]


def transitive_closure(pairs: Iterable[tuple[str, str]], ground: Iterable[str] | None = None) -> PreferenceRelation:
    """Smallest transitive superset of ``pairs``; raises CycleError on any cycle."""
    base = set(pairs)
    g = set(ground) if ground is not None else {v for p in base for v in p}
    elems = sorted(g)
    reach = {x: {y for (a, y) in base if a == x} for x in elems}
    for k in elems:
        for i in elems:
            if k in reach[i]:
                reach[i] |= reach[k]
    for x in elems:
        if x in reach[x]:
            raise CycleError(_find_cycle(base, x))
    return PreferenceRelation(tuple(elems), frozenset((x, y) for x in elems for y in reach[x]))


def _above_masks(rel: PreferenceRelation) -> tuple[list[str], list[int]]:
    elems = list(rel.ground)
    idx = {x: i for i, x in enumerate(elems)}
    above = [0] * len(elems)
    for x, y in rel.pairs:
        above[idx[y]] |= 1 << idx[x]
    return elems, above


def linear_extensions(partial: PreferenceRelation, cap: int = 10) -> list[PreferenceRelation]:
    """Every strict total order containing ``partial``, lexicographic by best-first id sequence."""
    if len(partial.ground) > cap:
        raise GroundSetTooLarge(f"{len(partial.ground)} alternatives exceeds enumeration cap {cap}")
    elems, above = _above_masks(partial)
    full = (1 << len(elems)) - 1
    out: list[PreferenceRelation] = []

    def walk(placed: int, prefix: list[str]):
        if placed == full:
            out.append(PreferenceRelation.from_ranking(prefix))
            return
        for i, x in enumerate(elems):
            if not placed >> i & 1 and above[i] & ~placed == 0:
                prefix.append(x)
                walk(placed | 1 << i, prefix)
                prefix.pop()

    walk(0, [])
    return out


def count_linear_extensions(partial: PreferenceRelation) -> int:
    elems, above = _above_masks(partial)
    n = len(elems)
    ways = [0] * (1 << n)
    ways[0] = 1
    for placed in range(1 << n):
        if not ways[placed]:
            continue
        for i in range(n):
            if not placed >> i & 1 and above[i] & ~placed == 0:
                ways[placed | 1 << i] += ways[placed]
    return ways[-1]


def first_linear_extension(partial: PreferenceRelation) -> PreferenceRelation:
    """The lexicographically first element of :func:`linear_extensions`, without enumerating."""
    elems, above = _above_masks(partial)
    placed, ranking = 0, []
    for _ in elems:
        i = next(i for i in range(len(elems)) if not placed >> i & 1 and above[i] & ~placed == 0)
        ranking.append(elems[i])
        placed |= 1 << i
    return PreferenceRelation.from_ranking(ranking)


def all_total_orders(ground: Iterable[str]) -> Iterator[PreferenceRelation]:
    for perm in itertools.permutations(sorted(ground)):
        yield PreferenceRelation.from_ranking(perm)


# ---------------------------------------------------------------------------
# attention functions and models


@dataclass(frozen=True, eq=False)
class AttentionFunction:
    """mu(D, A): probability that D is the consideration set at menu A.

    ``table[A]`` maps consideration sets to positive mass; omitted sets have
    mass zero. ``reference_set`` is E (empty for a plain attention function).
    """

    reference_set: frozenset
    table: Mapping[frozenset, Mapping[frozenset, Fraction]]

    def __post_init__(self):
        object.__setattr__(self, "reference_set", frozenset(self.reference_set))

    def mu(self, D: Iterable[str], A: Iterable[str]) -> Fraction:
        return self.table.get(frozenset(A), {}).get(frozenset(D), Fraction(0))

    def menus(self) -> list[frozenset]:
        return sorted(self.table, key=menu_key)

    def __eq__(self, other):
        if not isinstance(other, AttentionFunction):
            return NotImplemented
        strip = lambda t: {A: {D: m for D, m in row.items() if m} for A, row in t.items()}
        return self.reference_set == other.reference_set and strip(self.table) == strip(other.table)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class RamUrModel:
    reference_set: frozenset
    preference: PreferenceRelation
    attention: AttentionFunction

    def __post_init__(self):
        object.__setattr__(self, "reference_set", frozenset(self.reference_set))
        if not self.preference.is_total:
            raise ValueError("RAM-UR preference must be a strict total order")
        if self.attention.reference_set != self.reference_set:
            raise ValueError("attention reference set differs from model reference set")

    @property
    def ground(self) -> tuple[str, ...]:
        return self.preference.ground


@dataclass(frozen=True)
class RamUrIraModel:
    """Strict total order plus attention parameters gamma(x) in (0, 1]."""

    preference: PreferenceRelation
    gamma: Mapping[str, Fraction]

    def __post_init__(self):
        if not self.preference.is_total:
            raise ValueError("RAM-UR-IRA preference must be a strict total order")
        g = {x: to_probability(v) for x, v in self.gamma.items()}
        if set(g) != set(self.preference.ground):
            raise ValueError("gamma must be defined on exactly the ranked alternatives")
        for x, v in g.items():
            if not 0 < v <= 1:
                raise ValueError(f"gamma({x})={v} outside (0, 1]")
        object.__setattr__(self, "gamma", dict(sorted(g.items())))

    def __hash__(self):
        return hash((self.preference, tuple(self.gamma.items())))

    @property
    def ground(self) -> tuple[str, ...]:
        return self.preference.ground

    @property
    def reference_set(self) -> frozenset:
        return frozenset(x for x, v in self.gamma.items() if v == 1)


@dataclass
class DiagnosticReport:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    issues: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, check: str, ok: bool, issue: str | None = None):
        self.checks[check] = self.checks.get(check, True) and ok
        if not ok and issue:
            self.issues.append(issue)
