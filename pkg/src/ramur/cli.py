"""Command line interface: ``ramur check | identify | simulate | rum``.

Exit codes: 0 success, 1 axiom or model failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .axioms import THEOREM1, THEOREM2, check_all
from .core import RamUrIraModel, RamUrError
from .forward import InvalidAttention, evaluate, sample_choices
from .identify_ira import identify_ira
from .identify_ramur import AxiomFailure, identify_ramur
from .rum import build_rum, verify_rum_restrictions
from .serialize import (
    FormatError,
    dumps,
    ira_model_to_json,
    load_dataset,
    load_model,
    ramur_model_to_json,
    rum_to_json,
    scf_to_json,
    write_json,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
SUITES = {"ramur": ("RAM-UR", THEOREM1), "ira": ("RAM-UR-IRA", THEOREM2)}


def _rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("eps must be nonnegative")
    return v


def _uint64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _err(msg: str):
    print(f"error: {msg}", file=sys.stderr)


def cmd_check(args) -> int:
    scf = load_dataset(args.dataset)
    reports = check_all(scf, THEOREM1 + THEOREM2, eps=args.eps)
    verdict = {}
    for key, (label, axioms) in SUITES.items():
        failed = [a for a in axioms if not reports[a].passed]
        verdict[key] = failed
    classes = [SUITES[k][0] for k in SUITES if not verdict[k]]
    classification = " and ".join(classes) if classes else "neither"
    if args.json:
        print(dumps({
            "eps": str(args.eps),
            "reports": [r.to_json() for r in reports.values()],
            "suites": {SUITES[k][0]: {"passed": not f, "failed": f} for k, f in verdict.items()},
            "classification": classification,
        }), end="")
    else:
        for key, (label, axioms) in SUITES.items():
            print(f"[{label}]")
            for a in axioms:
                print("  " + reports[a].summary())
        print("; ".join(
            f"{SUITES[k][0]}: " + ("PASS" if not f else f"FAIL ({', '.join(f)})") for k, f in verdict.items()
        ))
        print(f"representable as: {classification}")
    return EXIT_OK if not verdict[args.model] else EXIT_FAIL


def cmd_identify(args) -> int:
    scf = load_dataset(args.dataset)
    try:
        if args.model == "ramur":
            ident = identify_ramur(scf)
            out = ramur_model_to_json(ident)
            summary = (f"E={sorted(ident.revealed_references)} "
                       f"P={sorted(ident.revealed_relation.pairs)} "
                       f"extensions={ident.extensions_count} chosen={ident.chosen_extension}")
        else:
            model = identify_ira(scf).model
            out = ira_model_to_json(model)
            summary = f"E={sorted(model.reference_set)} preference={model.preference}"
    except AxiomFailure as exc:
        _err(str(exc))
        for r in exc.reports.values():
            print("  " + r.summary(), file=sys.stderr)
        return EXIT_FAIL
    except RamUrError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_FAIL
    write_json(out, args.out)
    if args.out not in (None, "-"):
        print(summary)
    return EXIT_OK


def cmd_simulate(args) -> int:
    model = load_model(args.model_path)
    try:
        if args.sample is not None:
            scf = sample_choices(model, args.seed, args.sample).to_scf()
        else:
            scf = evaluate(model)
    except InvalidAttention as exc:
        _err(f"invalid model: {exc}")
        return EXIT_INPUT
    write_json(scf_to_json(scf), args.out)
    return EXIT_OK


def cmd_rum(args) -> int:
    model = load_model(args.model_path)
    if not isinstance(model, RamUrIraModel):
        _err("a RUM is only built for RAM-UR-IRA models (with 'gamma')")
        return EXIT_INPUT
    rum = build_rum(model)
    report = verify_rum_restrictions(rum, model)
    write_json(rum_to_json(rum, report), args.out)
    if not report.passed:
        _err("RUM verification failed: " + "; ".join(report.issues[:5]))
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run both axiom suites on a dataset")
    p.add_argument("dataset")
    p.add_argument("--model", choices=SUITES, default="ramur", help="suite that decides the exit code")
    p.add_argument("--eps", type=_rational, default=Fraction(0), help="comparison tolerance, e.g. 1/50 (default exact)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("identify", help="construct a representing model")
    p.add_argument("dataset")
    p.add_argument("--model", choices=SUITES, default="ramur")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("simulate", help="exact or sampled dataset from a model")
    p.add_argument("model_path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="model probabilities (default)")
    mode.add_argument("--sample", type=int, metavar="N", help="draws per menu")
    p.add_argument("--seed", type=_uint64, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("rum", help="random utility representation of a RAM-UR-IRA model")
    p.add_argument("model_path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rum)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "sample", None) is not None and args.sample < 1:
        _err("--sample needs N >= 1")
        return EXIT_INPUT
    try:
        return args.func(args)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
