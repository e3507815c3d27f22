"""JSON formats for datasets, models, RUMs, sample runs and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .core import (
    DEFAULT,
    AttentionFunction,
    PreferenceRelation,
    RamUrIraModel,
    RamUrModel,
    StochasticChoiceFunction,
    ValidationError,
    fmt_prob,
    menu_key,
    to_probability,
    validate_scf,
)
from .forward import SampleRun
from .identify_ramur import RamUrIdentification
from .rum import RumModel


class FormatError(ValueError):
    """Malformed input file; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_json(obj: Any, path: Union[str, Path, None]):
    text = dumps(obj)
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")


def read_json(path: Union[str, Path]) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(str(path), f"cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def _prob(value, where: str) -> Fraction:
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise FormatError(where, f"expected a rational string such as \"1/2\", got {value!r}")
    try:
        return to_probability(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise FormatError(where, f"cannot parse {value!r} as a rational") from None


# ---------------------------------------------------------------------------
# datasets


def scf_to_json(scf: StochasticChoiceFunction) -> dict:
    return {
        "alternatives": list(scf.ground_set),
        "menus": [
            {"menu": sorted(A), "probs": {x: fmt_prob(scf.p(x, A)) for x in sorted(A)}}
            for A in scf.menus()
        ],
    }


def scf_from_json(obj: Any) -> StochasticChoiceFunction:
    if not isinstance(obj, dict):
        raise FormatError("$", "dataset must be a JSON object")
    alts = obj.get("alternatives")
    if not isinstance(alts, list) or not all(isinstance(a, str) for a in alts):
        raise FormatError("$.alternatives", "expected a list of string ids")
    menus = obj.get("menus")
    if not isinstance(menus, list):
        raise FormatError("$.menus", "expected a list of menu rows")
    raw = []
    for i, row in enumerate(menus):
        where = f"$.menus[{i}]"
        if not isinstance(row, dict) or "menu" not in row:
            raise FormatError(where, "expected an object with 'menu' and 'probs'")
        members = row["menu"]
        if not isinstance(members, list) or not all(isinstance(a, str) for a in members):
            raise FormatError(f"{where}.menu", "expected a list of string ids")
        if len(set(members)) != len(members):
            raise FormatError(f"{where}.menu", "repeated ids")
        probs = row.get("probs", {})
        if not isinstance(probs, dict):
            raise FormatError(f"{where}.probs", "expected an object mapping ids to probabilities")
        if DEFAULT in probs:
            raise FormatError(f"{where}.probs.{DEFAULT}", "the default probability is derived and may not be given")
        raw.append((members, {x: _prob(v, f"{where}.probs.{x}") for x, v in probs.items()}))
    try:
        return validate_scf(raw, alts)
    except ValidationError as exc:
        raise FormatError("$", "invalid choice data: " + "; ".join(str(i) for i in exc.issues)) from exc


def load_dataset(path) -> StochasticChoiceFunction:
    return scf_from_json(read_json(path))


# ---------------------------------------------------------------------------
# models


def attention_to_json(att: AttentionFunction) -> list:
    out = []
    for A in att.menus():
        sets = sorted(((D, m) for D, m in att.table[A].items() if m), key=lambda kv: menu_key(kv[0]))
        out.append({"menu": sorted(A), "sets": [{"D": sorted(D), "p": fmt_prob(m)} for D, m in sets]})
    return out


def ramur_model_to_json(model: Union[RamUrModel, RamUrIdentification]) -> dict:
    ident = None
    if isinstance(model, RamUrIdentification):
        ident, model = model, model.model
    out = {
        "E": sorted(model.reference_set),
        "preference": model.preference.ranking(),
        "attention": attention_to_json(model.attention),
    }
    if ident is not None:
        out["revealed_references"] = sorted(ident.revealed_references)
        out["revealed_relation"] = [list(p) for p in sorted(ident.revealed_relation.pairs)]
        out["default_pairs"] = [list(p) for p in sorted(ident.default_pairs)]
        out["extensions_count"] = ident.extensions_count
    return out


def ira_model_to_json(model: RamUrIraModel) -> dict:
    return {
        "gamma": {x: fmt_prob(g) for x, g in model.gamma.items()},
        "preference": model.preference.ranking(),
    }


def model_to_json(model) -> dict:
    if isinstance(model, RamUrIraModel):
        return ira_model_to_json(model)
    return ramur_model_to_json(model)


def _ranking(obj, where) -> PreferenceRelation:
    if not isinstance(obj, list) or not all(isinstance(a, str) for a in obj):
        raise FormatError(where, "expected a best-first list of ids")
    try:
        return PreferenceRelation.from_ranking(obj)
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


def model_from_json(obj: Any) -> Union[RamUrModel, RamUrIraModel]:
    if not isinstance(obj, dict):
        raise FormatError("$", "model must be a JSON object")
    pref = _ranking(obj.get("preference"), "$.preference")
    if "gamma" in obj:
        gam = obj["gamma"]
        if not isinstance(gam, dict):
            raise FormatError("$.gamma", "expected an object mapping ids to rationals")
        gamma = {x: _prob(v, f"$.gamma.{x}") for x, v in gam.items()}
        try:
            return RamUrIraModel(pref, gamma)
        except ValueError as exc:
            raise FormatError("$.gamma", str(exc)) from None
    if "attention" in obj:
        E = obj.get("E", [])
        if not isinstance(E, list):
            raise FormatError("$.E", "expected a list of ids")
        table = {}
        for i, row in enumerate(obj["attention"]):
            where = f"$.attention[{i}]"
            try:
                A = frozenset(row["menu"])
                sets = row["sets"]
            except (TypeError, KeyError):
                raise FormatError(where, "expected an object with 'menu' and 'sets'") from None
            table[A] = {frozenset(s["D"]): _prob(s["p"], f"{where}.sets[{j}].p") for j, s in enumerate(sets)}
        try:
            return RamUrModel(frozenset(E), pref, AttentionFunction(frozenset(E), table))
        except ValueError as exc:
            raise FormatError("$", str(exc)) from None
    raise FormatError("$", "model needs either 'gamma' (RAM-UR-IRA) or 'attention' (RAM-UR)")


def load_model(path):
    return model_from_json(read_json(path))


# ---------------------------------------------------------------------------
# RUM, samples


def rum_to_json(rum: RumModel, verification=None) -> dict:
    out: dict[str, Any] = {"orders": [{"rank": list(r), "nu": fmt_prob(rum.weights[r])} for r in rum.orders]}
    if verification is not None:
        out["verification"] = {"passed": verification.passed, "checks": verification.checks,
                               "issues": verification.issues}
    return out


def rum_from_json(obj: Any) -> RumModel:
    try:
        return RumModel({tuple(o["rank"]): _prob(o["nu"], f"$.orders[{i}].nu") for i, o in enumerate(obj["orders"])})
    except (TypeError, KeyError):
        raise FormatError("$.orders", "expected a list of {rank, nu} objects") from None


def sample_run_to_json(run: SampleRun) -> dict:
    return {
        "seed": run.seed,
        "draws_per_menu": run.draws_per_menu,
        "frequencies": [
            {"menu": sorted(A), "freq": {x: fmt_prob(f) for x, f in run.frequencies[A].items()}}
            for A in sorted(run.frequencies, key=menu_key)
        ],
    }
